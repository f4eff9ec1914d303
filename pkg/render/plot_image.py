"""
采样图像 - 把子午面上的采样值渲染为灰度 PNG
"""

import logging
from pathlib import Path
from typing import Optional

import numpy as np
from PIL import Image, ImageDraw, ImageFont


class PlotRenderer:
    """灰度图渲染器：负值偏黑，正值偏白，区域外为中灰"""

    def __init__(self, cell_size: int = 6, title_height: int = 24):
        self.cell_size = cell_size
        self.title_height = title_height
        self.logger = logging.getLogger(__name__)

    def get_font(self, size: int = 14):
        """获取字体，找不到时使用默认字体"""
        try:
            return ImageFont.truetype("/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf", size)
        except OSError:
            return ImageFont.load_default()

    def to_gray(self, values: np.ndarray) -> np.ndarray:
        """对称归一化到 0..255，NaN 映射为 128"""
        values = np.asarray(values, dtype=float)
        finite = np.isfinite(values)
        peak = float(np.max(np.abs(values[finite]))) if finite.any() else 0.0
        gray = np.full(values.shape, 128.0)
        if peak > 0:
            gray[finite] = 127.5 + 127.5 * values[finite] / peak
        return np.clip(np.rint(gray), 0, 255).astype(np.uint8)

    def render(self, values: np.ndarray, title: str = "") -> Image.Image:
        """values 的行对应 x1（自上而下递减），列对应 x0"""
        gray = self.to_gray(values)
        rows, cols = gray.shape
        body = Image.fromarray(gray).resize(
            (max(cols * self.cell_size, 1), max(rows * self.cell_size, 1)), Image.Resampling.NEAREST)

        image = Image.new('L', (body.width, body.height + self.title_height), 255)
        image.paste(body, (0, self.title_height))

        # 标题栏
        draw = ImageDraw.Draw(image)
        draw.rectangle([0, 0, image.width - 1, self.title_height - 1], fill=0)
        if title:
            draw.text((4, 4), title, font=self.get_font(), fill=255)
        return image

    def save(self, values: np.ndarray, path: str, title: str = "") -> Optional[Path]:
        try:
            target = Path(path)
            target.parent.mkdir(parents=True, exist_ok=True)
            self.render(values, title).save(target, format='PNG')
            self.logger.info(f"图像已保存: {target}")
            return target
        except Exception as e:
            self.logger.error(f"保存图像失败: {e}", exc_info=True)
            return None
