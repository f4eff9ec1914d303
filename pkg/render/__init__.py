"""
图像渲染模块
"""

__all__ = ['PlotRenderer']
