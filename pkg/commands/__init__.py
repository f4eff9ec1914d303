"""
命令行子命令模块
"""

__all__ = ['COMMANDS', 'RunConfig']
