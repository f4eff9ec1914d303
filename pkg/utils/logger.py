"""
日志工具
"""

import sys
import logging
from pathlib import Path
from datetime import datetime
from typing import Optional, Union

LEVELS = {"DEBUG": logging.DEBUG, "INFO": logging.INFO,
          "WARNING": logging.WARNING, "ERROR": logging.ERROR}


def parse_level(level: Union[int, str]) -> int:
    """把 "INFO" 之类的名称转成日志级别"""
    if isinstance(level, int):
        return level
    return LEVELS.get(str(level).upper(), logging.INFO)


def setup_logger(name: str,
                 level: Union[int, str] = logging.INFO,
                 log_dir: Optional[str] = None,
                 console: bool = True) -> logging.Logger:
    """设置日志配置，控制台输出到 stderr，标准输出只留给数据"""

    logger = logging.getLogger(name)
    logger.setLevel(parse_level(level))

    # 避免重复添加handler
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(parse_level(level))
        return logger

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    if console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(parse_level(level))
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    # 文件处理器，按日期命名
    if log_dir:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        today = datetime.now().strftime('%Y-%m-%d')
        file_handler = logging.FileHandler(log_path / f"{name}_{today}.log", encoding='utf-8')
        file_handler.setLevel(parse_level(level))
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger
