"""
工具函数模块
"""

__all__ = ['setup_logger', 'OutputWriter', 'parse_rational_list', 'format_float']
