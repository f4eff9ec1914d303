"""
旋转椭球上的积分 - 单项式积分、内积、Gram 矩阵与 Garabedian 范数闭式
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

from sympy import Poly, Rational, Symbol, sqrt
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from core.errors import IndexRangeError, UnsupportedParameterError
from core.exact import Number, double_factorial, format_rational, pochhammer, factorial, to_qq, to_rational
from core.harmonics import SpheroidParam, legendre_derivative_poly
from core.poly import TriPoly
from core.rquat import QPoly

logger = logging.getLogger(__name__)

HALF = Rational(1, 2)
_TAU = Symbol('tau')


@dataclass(frozen=True)
class PiRational:
    """精确值 coeff · π"""
    coeff: Rational

    def __add__(self, other: 'PiRational') -> 'PiRational':
        return PiRational(self.coeff + other.coeff)

    def __mul__(self, factor: Number) -> 'PiRational':
        return PiRational(self.coeff * to_rational(factor))

    __rmul__ = __mul__

    def __truediv__(self, other: 'PiRational') -> Rational:
        """两个 π 倍数之比为有理数"""
        return self.coeff / other.coeff

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __str__(self) -> str:
        return format_rational(self.coeff)


@lru_cache(maxsize=None)
def _weight(a: int, b: int, c: int, t: Rational):
    """∫ x0^a x1^b x2^c / π，返回 QQ 元素"""
    if a % 2 or b % 2 or c % 2:
        return QQ.zero
    ball = (4 * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1)
            / double_factorial(a + b + c + 3))
    return to_qq(ball * (1 - t) ** ((b + c) // 2 + 1))


def monomial_integral(a: int, b: int, c: int, sp) -> PiRational:
    """∫_{Ω_t} x0^a x1^b x2^c dV"""
    if min(a, b, c) < 0:
        raise ValueError(f"指数不能为负: ({a}, {b}, {c})")
    return PiRational(QQ.to_sympy(_weight(a, b, c, SpheroidParam.of(sp).t)))


def _bilinear(p, q, t: Rational):
    """∫ p q / π，按指数奇偶分桶以跳过积分为零的组合"""
    if not p or not q:
        return QQ.zero
    buckets = defaultdict(list)
    for exps, coeff in q.items():
        buckets[(exps[0] & 1, exps[1] & 1, exps[2] & 1)].append((exps, coeff))
    total = QQ.zero
    for (a, b, c), coeff in p.items():
        for (d, e, f), other in buckets.get((a & 1, b & 1, c & 1), ()):
            weight = _weight(a + d, b + e, c + f, t)
            if weight:
                total += coeff * other * weight
    return total


def _as_qpoly(f: Union[TriPoly, QPoly]) -> QPoly:
    return QPoly.scalar(f) if isinstance(f, TriPoly) else f


def inner_product(f: Union[TriPoly, QPoly], g: Union[TriPoly, QPoly], sp) -> PiRational:
    """⟨f, g⟩ = ∫ Sc(conj(f) g)"""
    t = SpheroidParam.of(sp).t
    total = QQ.zero
    for a, b in zip(_as_qpoly(f).components(), _as_qpoly(g).components()):
        total += _bilinear(a.element, b.element, t)
    return PiRational(QQ.to_sympy(total))


def squared_norm(f: Union[TriPoly, QPoly], sp) -> PiRational:
    return inner_product(f, f, sp)


class GramMatrix:
    """Gram 矩阵（元素以 π 为单位）"""

    def __init__(self, labels: List[str], entries: List[List[Rational]]):
        self.labels = labels
        self.entries = entries

    @property
    def size(self) -> int:
        return len(self.labels)

    def rank(self) -> int:
        if not self.labels:
            return 0
        rows = [[to_qq(v) for v in row] for row in self.entries]
        return DomainMatrix(rows, (self.size, self.size), QQ).rank()

    def off_diagonal_witness(self) -> Optional[Tuple[str, str, Rational]]:
        """第一个非零的非对角元"""
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.entries[i][j] != 0:
                    return self.labels[i], self.labels[j], self.entries[i][j]
        return None

    def is_diagonal(self) -> bool:
        return self.off_diagonal_witness() is None

    def to_rows(self) -> List[List[str]]:
        return [[format_rational(v) for v in row] for row in self.entries]


def gram(elements: Sequence[Tuple[str, Union[TriPoly, QPoly]]], sp) -> GramMatrix:
    labels = [label for label, _ in elements]
    size = len(elements)
    entries = [[Rational(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = inner_product(elements[i][1], elements[j][1], sp).coeff
            entries[i][j] = value
            entries[j][i] = value
    logger.debug(f"Gram 矩阵 {size}x{size} t={SpheroidParam.of(sp).t}")
    return GramMatrix(labels, entries)


# Garabedian 范数闭式

def _kappa(n: int, m: int) -> Rational:
    num = (n + m + 1) * factorial(n + m + 1) * factorial(n - m + 2)
    den = 2 ** (2 * n + 2) * pochhammer(HALF, n + 1) * pochhammer(HALF, n + 2)
    return num / den


@lru_cache(maxsize=None)
def _legendre_product_antiderivative(n: int, m: int) -> Poly:
    """∫_0^τ (τ²-1)^m P_n^{(m)} P_{n+2}^{(m)}"""
    tau_poly = Poly(_TAU ** 2 - 1, _TAU, domain='QQ') ** m
    first = Poly(legendre_derivative_poly(n, m).as_expr().subs('z', _TAU), _TAU, domain='QQ')
    second = Poly(legendre_derivative_poly(n + 2, m).as_expr().subs('z', _TAU), _TAU, domain='QQ')
    return (tau_poly * first * second).integrate()


def _check_norm_index(n: int, m: int, parity: str):
    if n < 0 or m < 0 or m > n + 1:
        raise IndexRangeError(f"V 的范数要求 0 ≤ m ≤ n + 1: ({n}, {m})")
    if parity == "-" and m == 0:
        raise IndexRangeError(f"m = 0 时没有 '-' 分量: n={n}")


def garabedian_norm_closed_form(n: int, m: int, sp, parity: str = "+") -> PiRational:
    """长球且 μ = √t 为有理数时 ‖V_{n,m}^±[t]‖² 的闭式"""
    _check_norm_index(n, m, parity)
    param = SpheroidParam.of(sp)
    mu = sqrt(param.t)
    if param.t <= 0 or not mu.is_Rational:
        raise UnsupportedParameterError(f"闭式要求 t > 0 且 √t 为有理数: t={param.t}")
    antiderivative = _legendre_product_antiderivative(n, m)
    integral = antiderivative.eval(1 / mu) - antiderivative.eval(1)
    weight = 2 if m == 0 else 1
    return PiRational(Rational(weight * _kappa(n, m) * mu ** (2 * n + 3) * integral))


def garabedian_norm_polynomial(n: int, m: int, sp, parity: str = "+") -> PiRational:
    """同一闭式写成 t 的多项式，对所有 t < 1 成立"""
    _check_norm_index(n, m, parity)
    t = SpheroidParam.of(sp).t
    total = Rational(0)
    for (power,), coeff in _legendre_product_antiderivative(n, m).terms():
        total += coeff * t ** ((2 * n + 3 - power) // 2)
    weight = 2 if m == 0 else 1
    return PiRational(weight * _kappa(n, m) * total)
