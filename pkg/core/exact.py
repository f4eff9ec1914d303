"""
精确算术 - 有理数、半整数、阶乘与升阶乘
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from sympy import Integer, Rational, factorial2, rf
from sympy import factorial as sym_factorial
from sympy.polys.domains import QQ

from core.errors import ParseError

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


@dataclass(frozen=True)
class HalfInteger:
    """半整数 twice_value / 2"""
    twice_value: int

    @property
    def value(self) -> Rational:
        return Rational(self.twice_value, 2)

    def __add__(self, other: int) -> 'HalfInteger':
        return HalfInteger(self.twice_value + 2 * int(other))

    def __neg__(self) -> 'HalfInteger':
        return HalfInteger(-self.twice_value)


Number = Union[int, str, Rational, HalfInteger]


def to_rational(value: Number) -> Rational:
    """把 int / "p/q" / Rational / HalfInteger 转成精确有理数"""
    if isinstance(value, HalfInteger):
        return value.value
    if isinstance(value, bool):
        raise ParseError(f"无法解析为有理数: {value!r}")
    if isinstance(value, int):
        return Integer(value)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise ParseError(f"无法解析为有理数: {value!r}")
        den = int(match.group(2)) if match.group(2) else 1
        if den == 0:
            raise ParseError(f"分母为零: {value!r}")
        return Rational(int(match.group(1)), den)
    if isinstance(value, Rational):
        return value
    try:
        converted = QQ.to_sympy(QQ.convert(value))
    except Exception as e:
        raise ParseError(f"无法解析为有理数: {value!r}") from e
    return converted


def format_rational(value: Number) -> str:
    """格式化为 "p/q"，整数省略分母"""
    r = to_rational(value)
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"


def to_qq(value: Number):
    """转成多项式系数域 QQ 的元素"""
    r = to_rational(value)
    return QQ(int(r.p), int(r.q))


def pochhammer(a: Number, n: int) -> Rational:
    """升阶乘 (a)_n = a(a+1)...(a+n-1)，(a)_0 = 1"""
    if n < 0:
        raise ValueError(f"升阶乘长度不能为负: {n}")
    return _pochhammer(to_rational(a), n)


@lru_cache(maxsize=None)
def _pochhammer(a: Rational, n: int) -> Rational:
    return Rational(rf(a, n))


def factorial(n: int) -> Rational:
    if n < 0:
        raise ValueError(f"阶乘参数不能为负: {n}")
    return Integer(sym_factorial(n))


def double_factorial(n: int) -> Rational:
    """双阶乘，约定 (-1)!! = 0!! = 1"""
    if n < -1:
        raise ValueError(f"双阶乘参数无效: {n}")
    if n <= 0:
        return Integer(1)
    return Integer(factorial2(n))
