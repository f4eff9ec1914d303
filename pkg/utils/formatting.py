"""
格式化工具 - 参数列表解析与多项式的表格化
"""

from typing import List, Sequence, Union

from core.errors import ParseError
from core.exact import format_rational, to_rational
from core.poly import TriPoly
from core.rquat import COMPONENT_NAMES, QPoly


def parse_rational_list(text: Union[str, Sequence]) -> List:
    """"0,1/4,-3" 或列表 -> 有理数列表"""
    if isinstance(text, str):
        items = [item for item in text.split(",")]
    else:
        items = list(text)
    if not items or any(isinstance(item, str) and not item.strip() for item in items):
        raise ParseError(f"参数列表为空或含空项: {text!r}")
    return [to_rational(item) for item in items]


def element_rows(element: Union[TriPoly, QPoly]) -> List[List[str]]:
    """多项式展开为 (component, e0, e1, e2, coeff) 行"""
    if isinstance(element, TriPoly):
        pairs = [("s", element)]
    else:
        pairs = list(zip(COMPONENT_NAMES, element.components()))
    rows = []
    for name, poly in pairs:
        for mono, coeff in poly.terms():
            rows.append([name, str(mono.a), str(mono.b), str(mono.c), format_rational(coeff)])
    return rows


def format_float(value: float) -> str:
    """17 位有效数字"""
    return f"{float(value):.17g}"
