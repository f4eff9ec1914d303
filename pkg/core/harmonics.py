"""
调和函数 - 球体与旋转椭球上的立体调和多项式 U 与 Garabedian 函数 V

参数 t = μ²，t > 0 为长球，t = 0 为单位球，t < 0 为扁球。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from sympy import Poly, Rational, Symbol, binomial, legendre, sqrt

from core.convert import coef_U_to_U
from core.errors import IndexRangeError, UnsupportedParameterError, UnsupportedRegimeError
from core.exact import Number, factorial, pochhammer, to_rational
from core.poly import TriPoly, X0, radius_squared

logger = logging.getLogger(__name__)

PARITIES = ("+", "-")
_Z = Symbol('z')


@dataclass(frozen=True)
class SpheroidParam:
    """旋转椭球参数 t = μ²，要求 t < 1"""
    t: Rational

    def __post_init__(self):
        value = to_rational(self.t)
        if value >= 1:
            raise UnsupportedParameterError(f"参数 t 必须小于 1: {value}")
        object.__setattr__(self, 't', value)

    @classmethod
    def of(cls, value: Number) -> 'SpheroidParam':
        if isinstance(value, SpheroidParam):
            return value
        return cls(to_rational(value))

    @property
    def regime(self) -> str:
        if self.t > 0:
            return "prolate"
        if self.t < 0:
            return "oblate"
        return "ball"

    @property
    def mu(self):
        """μ = √t（扁球时为纯虚数）"""
        return sqrt(self.t)

    def __str__(self) -> str:
        return str(self.t)


@dataclass(frozen=True)
class HarmonicIndex:
    """指标 (n, m, parity)，parity 为 '+' (cos) 或 '-' (sin)"""
    n: int
    m: int
    parity: str = "+"

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise IndexRangeError(f"指标不能为负: ({self.n}, {self.m})")
        if self.parity not in PARITIES:
            raise IndexRangeError(f"奇偶性无效: {self.parity!r}")
        if self.parity == "-" and self.m == 0:
            raise IndexRangeError(f"m = 0 时没有 '-' 分量: n={self.n}")

    @property
    def label(self) -> str:
        return f"{self.n},{self.m},{self.parity}"


def _param(sp) -> SpheroidParam:
    return SpheroidParam.of(sp)


# 勒让德函数

@lru_cache(maxsize=None)
def legendre_derivative_poly(n: int, m: int) -> Poly:
    """P_n 的 m 阶导数 P_n^{(m)}(z)"""
    p = Poly(legendre(n, _Z), _Z, domain='QQ')
    for _ in range(m):
        p = p.diff(_Z)
    return p


def assoc_legendre(n: int, m: int, x: Number, regime: str = None):
    """
    精确的连带勒让德函数 P_n^m(x)。
    regime='interval' 时 x ∈ [-1, 1]，带 Condon-Shortley 相位；
    regime='cut' 时 x > 1，取正分支 (x²-1)^{m/2}。
    """
    x = to_rational(x) if not hasattr(x, 'is_number') else x
    if regime is None:
        regime = "interval" if abs(x) <= 1 else "cut"
    if m < 0 or n < 0 or m > n:
        raise IndexRangeError(f"勒让德指标无效: ({n}, {m})")
    derivative = legendre_derivative_poly(n, m).as_expr().subs(_Z, x)
    if regime == "interval":
        if abs(x) > 1:
            raise ValueError(f"x 不在 [-1, 1] 内: {x}")
        value = (-1) ** m * (1 - x ** 2) ** Rational(m, 2) * derivative
    elif regime == "cut":
        if x <= 1:
            raise ValueError(f"x 不在 (1, ∞) 内: {x}")
        value = (x ** 2 - 1) ** Rational(m, 2) * derivative
    else:
        raise ValueError(f"未知的区间: {regime}")
    return value


def assoc_legendre_float(n: int, m: int, x, regime: str = "interval"):
    """浮点版本，支持 numpy 数组"""
    x = np.asarray(x, dtype=float)
    if m > n:
        return np.zeros_like(x)
    coeffs = [float(c) for c in legendre_derivative_poly(n, m).all_coeffs()]
    derivative = np.polyval(coeffs, x)
    if regime == "interval":
        return (-1) ** m * np.power(np.clip(1 - x ** 2, 0.0, None), m / 2) * derivative
    return np.power(np.clip(x ** 2 - 1, 0.0, None), m / 2) * derivative


# 立体调和多项式

@lru_cache(maxsize=None)
def azimuthal_factor(m: int, parity: str) -> TriPoly:
    """ρ^m cos(mφ) 或 ρ^m sin(mφ)，即 (x1 + i x2)^m 的实部或虚部"""
    terms = {}
    for k in range(m + 1):
        if parity == "+" and k % 2 == 0:
            terms[(0, m - k, k)] = binomial(m, k) * (-1) ** (k // 2)
        elif parity == "-" and k % 2 == 1:
            terms[(0, m - k, k)] = binomial(m, k) * (-1) ** ((k - 1) // 2)
    return TriPoly.from_terms(terms)


@lru_cache(maxsize=None)
def _ball_harmonic(n: int, m: int, parity: str) -> TriPoly:
    if m < 0 or m > n or (parity == "-" and m == 0):
        return TriPoly.zero()
    r2 = radius_squared().element
    radial = TriPoly.zero().element
    for (power,), coeff in legendre_derivative_poly(n, m).terms():
        j = (n - m - power) // 2
        radial += X0 ** power * r2 ** j * coeff
    result = TriPoly(radial) * azimuthal_factor(m, parity)
    return result.scale((-1) ** m)


def spherical_solid_harmonic(idx: HarmonicIndex) -> TriPoly:
    """单位球上的立体调和多项式 U_{n,m}^±[0] = |x|^n P_n^m(x0/|x|) Φ_m^±"""
    if idx.m > idx.n:
        raise IndexRangeError(f"U 要求 m ≤ n: {idx.label}")
    return _ball_harmonic(idx.n, idx.m, idx.parity)


@lru_cache(maxsize=None)
def _spheroidal_harmonic(n: int, m: int, parity: str, t: Rational) -> TriPoly:
    if m < 0 or m > n or (parity == "-" and m == 0):
        return TriPoly.zero()
    pieces = TriPoly.zero()
    for k in range((n - m) // 2 + 1):
        coeff = coef_U_to_U(n, m, k) * t ** k
        if coeff:
            pieces = pieces + _ball_harmonic(n - 2 * k, m, parity).scale(coeff)
    logger.debug(f"构造 U[{n},{m},{parity}] t={t}")
    return pieces


def spheroidal_solid_harmonic(idx: HarmonicIndex, sp) -> TriPoly:
    """旋转椭球立体调和多项式 U_{n,m}^±[t]"""
    if idx.m > idx.n:
        raise IndexRangeError(f"U 要求 m ≤ n: {idx.label}")
    return _spheroidal_harmonic(idx.n, idx.m, idx.parity, _param(sp).t)


def harmonic_or_zero(n: int, m: int, parity: str, t: Rational) -> TriPoly:
    """越界指标返回 0 的内部版本"""
    if n < 0:
        return TriPoly.zero()
    return _spheroidal_harmonic(n, m, parity, to_rational(t))


@lru_cache(maxsize=None)
def _garabedian(n: int, m: int, parity: str, t: Rational) -> TriPoly:
    if n < 0 or m < 0 or m > n + 1 or (parity == "-" and m == 0):
        return TriPoly.zero()
    return _spheroidal_harmonic(n + 1, m, parity, t).partial_derivative(0)


def garabedian_harmonic(idx: HarmonicIndex, sp) -> TriPoly:
    """Garabedian 函数 V_{n,m}^±[t] = ∂x0 U_{n+1,m}^±[t]，其中 V_{n,n+1} = 0"""
    if idx.m > idx.n + 1:
        raise IndexRangeError(f"V 要求 m ≤ n + 1: {idx.label}")
    return _garabedian(idx.n, idx.m, idx.parity, _param(sp).t)


def garabedian_or_zero(n: int, m: int, parity: str, t: Rational) -> TriPoly:
    """越界指标（m > n + 1、m < 0、m = 0 的 '-'）返回 0"""
    return _garabedian(n, m, parity, to_rational(t))


# 长球坐标

def coords_to_cartesian(sp, u, v, phi) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """长球坐标 (u, v, φ) 到笛卡尔坐标"""
    param = _param(sp)
    if param.regime != "prolate":
        raise UnsupportedRegimeError(f"长球坐标要求 t > 0: t={param.t}")
    mu = float(param.mu)
    u, v, phi = (np.asarray(a, dtype=float) for a in (u, v, phi))
    x0 = mu * np.cos(u) * np.cosh(v)
    x1 = mu * np.sin(u) * np.sinh(v) * np.cos(phi)
    x2 = mu * np.sin(u) * np.sinh(v) * np.sin(phi)
    return x0, x1, x2


def eval_via_coords(idx: HarmonicIndex, sp, coords: Sequence[float]):
    """通过长球坐标公式计算 U_{n,m}^±[t] 的浮点值"""
    param = _param(sp)
    if param.regime != "prolate":
        raise UnsupportedRegimeError(f"坐标公式仅适用于长球: t={param.t}")
    if idx.m > idx.n:
        raise IndexRangeError(f"U 要求 m ≤ n: {idx.label}")
    u, v, phi = (np.asarray(a, dtype=float) for a in coords)
    n, m = idx.n, idx.m
    mu = float(param.mu)
    scale = float(factorial(n - m) / (2 ** n * pochhammer(Rational(1, 2), n)))
    angular = np.cos(m * phi) if idx.parity == "+" else np.sin(m * phi)
    value = (scale * mu ** n
             * assoc_legendre_float(n, m, np.cos(u), "interval")
             * assoc_legendre_float(n, m, np.cosh(v), "cut")
             * angular)
    return value
