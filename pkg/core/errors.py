"""
异常定义 - 工具包统一的错误类型
"""


class ToolkitError(Exception):
    """工具包基础异常"""


class IndexRangeError(ToolkitError):
    """指标 (n, m, parity) 越界"""


class UnsupportedRegimeError(ToolkitError):
    """参数区间不支持该操作（例如非长球坐标）"""


class UnsupportedParameterError(ToolkitError):
    """参数取值不支持闭式计算"""


class UnsupportedFamilyError(ToolkitError):
    """不支持的基函数族"""


class UnknownSuiteError(ToolkitError):
    """未知的验证套件"""


class ParseError(ToolkitError):
    """有理数或参数解析失败"""


class ConfigError(ToolkitError):
    """配置无效"""
