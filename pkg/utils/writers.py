"""
输出写入器 - 按格式（JSON / CSV）写到文件或标准输出
"""

import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

from core.errors import ConfigError

logger = logging.getLogger(__name__)


class OutputWriter:
    """通用输出写入器"""

    FORMATS = ("json", "csv")

    def __init__(self, fmt: str = "json", out: Optional[str] = None):
        if fmt not in self.FORMATS:
            raise ConfigError(f"不支持的输出格式: {fmt}")
        self.fmt = fmt
        self.out = out

    @staticmethod
    def render_json(payload: Any) -> str:
        return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=False) + "\n"

    @staticmethod
    def render_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    def write(self, json_payload: Any = None, header: Sequence[str] = (),
              rows: Optional[List[Sequence[Any]]] = None):
        """按 self.fmt 选择 JSON 负载或 CSV 表格写出"""
        if self.fmt == "json":
            text = self.render_json(json_payload)
        else:
            text = self.render_csv(header, rows or [])
        self.write_text(text)

    def write_text(self, text: str):
        if self.out:
            path = Path(self.out)
            if path.parent and not path.parent.exists():
                path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            logger.info(f"输出已写入: {path}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
