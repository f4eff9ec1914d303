"""
核心模块 - 精确算术、多项式、调和与单演基、基变换与积分
"""

__version__ = "1.0.0"
__all__ = ['exact', 'poly', 'rquat', 'harmonics', 'convert', 'integrals', 'contragenic', 'basis', 'errors']
