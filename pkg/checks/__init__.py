"""
验证套件模块
"""

__all__ = ['SUITES', 'SuiteConfig', 'run_suites']
