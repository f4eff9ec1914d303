"""
基变换系数 - U、V、X 各族在不同参数 t 之间的精确展开系数

所有系数在指标越界时返回 0，不抛出异常。
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from core.errors import IndexRangeError, UnsupportedFamilyError
from core.exact import HalfInteger, Number, factorial, pochhammer, to_qq, to_rational

logger = logging.getLogger(__name__)

HALF = Rational(1, 2)
ZERO = Rational(0)


class Family(str, Enum):
    """系数族"""
    U_TO_U = "U_to_U"
    V_TO_V = "V_to_V"
    VHAT_TO_U0 = "Vhat_to_U0"
    U0_TO_UMU = "U0_to_Umu"
    U0_TO_VMU = "U0_to_Vmu"
    VMU_FROM_UMU = "Vmu_from_Umu"
    UMU_FROM_VMU = "Umu_from_Vmu"
    V0_FROM_VMU = "V0_from_Vmu"
    W_MUT_MU = "W_mut_mu"


@dataclass(frozen=True)
class CoeffQuery:
    n: int
    m: int
    k: int
    family: Family


# t 无关的系数

@lru_cache(maxsize=None)
def coef_U_to_U(n: int, m: int, k: int) -> Rational:
    """U_{n,m}[t] = Σ c_{n,m,k} t^k U_{n-2k,m}[0]，0 ≤ 2k ≤ n-m"""
    if k < 0 or m < 0 or 2 * k > n - m:
        return ZERO
    num = pochhammer(HALF, n - k) * pochhammer(n + m - 2 * k + 1, 2 * k)
    den = (-4) ** k * pochhammer(HALF, n) * factorial(k)
    return num / den


def coef_V_to_V(n: int, m: int, k: int) -> Rational:
    """V_{n,m}[t] = Σ ĉ_{n,m,k} t^k V_{n-2k,m}[0]，0 ≤ 2k ≤ n-m+1"""
    if k < 0 or 2 * k > n - m + 1:
        return ZERO
    return coef_U_to_U(n + 1, m, k)


def coef_Vhat_to_U0(n: int, m: int, k: int) -> Rational:
    """V_{n,m}[t] 以 U_{n-2k,m}[0] 展开的系数"""
    return (n + m - 2 * k + 1) * coef_V_to_V(n, m, k)


@lru_cache(maxsize=None)
def coef_U0_to_Umu(n: int, m: int, k: int) -> Rational:
    """U_{n,m}[0] = Σ c⁰_{n,m,k} t^k U_{n-2k,m}[t]，0 ≤ 2k ≤ n-m"""
    if k < 0 or m < 0 or 2 * k > n - m:
        return ZERO
    num = (4 ** (n - 2 * k) * (2 * n - 4 * k + 1) * factorial(n - k)
           * factorial(m + n) * pochhammer(HALF, n - 2 * k))
    den = factorial(k) * factorial(2 * n - 2 * k + 1) * factorial(n + m - 2 * k)
    return num / den


def coef_U0_to_Vmu(n: int, m: int, k: int) -> Rational:
    """U_{n,m}[0] = Σ č⁰ t^k V_{n-2k,m}[t]"""
    if k < 0 or 2 * k > n - m:
        return ZERO
    return coef_U0_to_Umu(n + 1, m, k) / (n + m + 1)


@lru_cache(maxsize=None)
def coef_Vmu_from_Umu(n: int, m: int, k: int) -> Rational:
    """V_{n,m}[t] = Σ coef t^k U_{n-2k,m}[t]，0 ≤ 2k ≤ n-m"""
    if k < 0 or m < 0 or 2 * k > n - m:
        return ZERO
    num = factorial(n + m + 1) * pochhammer(HALF, n - 2 * k + 1)
    den = 4 ** k * factorial(n + m - 2 * k) * pochhammer(HALF, n + 1)
    return num / den


def coef_Umu_from_Vmu(n: int, m: int, k: int) -> Rational:
    """U_{n,m}[t] = V_{n,m}[t]/(n+m+1) - t (n+m)/(4n²-1) V_{n-2,m}[t]"""
    if k < 0 or m < 0 or 2 * k > n - m:
        return ZERO
    if k == 0:
        return Rational(1, n + m + 1)
    if k == 1:
        return Rational(-(n + m), 4 * n * n - 1)
    return ZERO


@lru_cache(maxsize=None)
def coef_Umu_from_Vmu_by_inversion(n: int, m: int, k: int) -> Rational:
    """同一系数由 coef_Vmu_from_Umu 的三角形逆推得到，用于交叉校验"""
    if k < 0 or m < 0 or 2 * k > n - m:
        return ZERO
    lead = coef_Vmu_from_Umu(n, m, 0)
    if k == 0:
        return 1 / lead
    total = ZERO
    for j in range(1, k + 1):
        total += coef_Vmu_from_Umu(n, m, j) * coef_Umu_from_Vmu_by_inversion(n - 2 * j, m, k - j)
    return -total / lead


def coef_V0_from_Vmu(n: int, m: int, k: int) -> Rational:
    """V_{n,m}[0] = Σ ĉ⁰ t^k V_{n-2k,m}[t]，0 ≤ 2k ≤ n-m+1"""
    if k < 0 or 2 * k > n - m + 1 or 2 * k > n:
        return ZERO
    return coef_U0_to_Umu(n + 1, m, k)


# 超几何形式

def hypergeom_terminating(k: int, n: int, z: Number) -> Rational:
    """₂F₁(-k, -n+k-3/2; -n-1/2; z)，k 项后截断"""
    z = to_rational(z)
    b = HalfInteger(2 * (k - n) - 3)
    c = HalfInteger(-2 * n - 1)
    total = ZERO
    for l in range(k + 1):
        term = pochhammer(-k, l) * pochhammer(b, l) / (factorial(l) * pochhammer(c, l))
        total += term * z ** l
    return total


@lru_cache(maxsize=None)
def _gamma(n: int, m: int, k: int) -> Rational:
    num = factorial(n + m + 1) * pochhammer(HALF, n - 2 * k + 2)
    den = (4 ** k * factorial(k) * factorial(n + m - 2 * k + 1)
           * pochhammer(HALF, n - k + 2))
    return num / den


def coef_W(n: int, m: int, k: int, t_target: Number, t_source: Number) -> Rational:
    """V_{n,m}[t̃] = Σ w_{n,m,k} V_{n-2k,m}[t]，0 ≤ 2k ≤ min(n-m+1, n)"""
    if k < 0 or m < 0 or 2 * k > n - m + 1 or 2 * k > n:
        return ZERO
    t_target = to_rational(t_target)
    t_source = to_rational(t_source)
    if t_source == 0:
        return coef_V_to_V(n, m, k) * t_target ** k
    z = t_target / t_source
    return hypergeom_terminating(k, n, z) * _gamma(n, m, k) * t_source ** k


def coef_W_sum(n: int, m: int, k: int, t_target: Number, t_source: Number) -> Rational:
    """经由 t = 0 的双重求和，与 coef_W 相互校验"""
    if k < 0 or m < 0 or 2 * k > n - m + 1 or 2 * k > n:
        return ZERO
    t_target = to_rational(t_target)
    t_source = to_rational(t_source)
    total = ZERO
    for l in range(k + 1):
        total += (coef_V_to_V(n, m, l) * t_target ** l
                  * coef_V0_from_Vmu(n - 2 * l, m, k - l) * t_source ** (k - l))
    return total


def coefficient(query: CoeffQuery, t_target: Number = 0, t_source: Number = 0) -> Rational:
    """按族分派"""
    family = Family(query.family)
    n, m, k = query.n, query.m, query.k
    if family is Family.W_MUT_MU:
        return coef_W(n, m, k, t_target, t_source)
    table = {
        Family.U_TO_U: coef_U_to_U,
        Family.V_TO_V: coef_V_to_V,
        Family.VHAT_TO_U0: coef_Vhat_to_U0,
        Family.U0_TO_UMU: coef_U0_to_Umu,
        Family.U0_TO_VMU: coef_U0_to_Vmu,
        Family.VMU_FROM_UMU: coef_Vmu_from_Umu,
        Family.UMU_FROM_VMU: coef_Umu_from_Vmu,
        Family.V0_FROM_VMU: coef_V0_from_Vmu,
    }
    return table[family](n, m, k)


# 基变换

BASIS_FAMILIES = ("U", "V", "X", "Xbar")


@dataclass(frozen=True)
class ConversionTerm:
    """展开式中的一项：coefficient · family_{n,m}^{parity}[t_source]"""
    n: int
    m: int
    parity: str
    coefficient: Rational


def _check_index(family: str, n: int, m: int, parity: str):
    if family not in BASIS_FAMILIES:
        raise UnsupportedFamilyError(f"不支持的变换族: {family}")
    if n < 0 or m < 0 or parity not in ("+", "-") or (parity == "-" and m == 0):
        raise IndexRangeError(f"指标无效: ({n}, {m}, {parity})")
    limit = n if family == "U" else n + 1
    if m > limit:
        raise IndexRangeError(f"{family} 族要求 m ≤ {limit}: ({n}, {m})")


def _conversion_coefficient(family: str, n: int, m: int, k: int,
                            t_source: Rational, t_target: Rational) -> Rational:
    if family == "U":
        total = ZERO
        for l in range(k + 1):
            total += (coef_U_to_U(n, m, l) * t_target ** l
                      * coef_U0_to_Umu(n - 2 * l, m, k - l) * t_source ** (k - l))
        return total
    return coef_W(n, m, k, t_target, t_source)


def _source_degrees(family: str, n: int, m: int) -> List[int]:
    """参与展开的 k（源元素非零）"""
    if family in ("U", "V"):
        return list(range((n - m) // 2 + 1)) if n >= m else []
    top = min(n - m + 1, n)
    return list(range(top // 2 + 1)) if top >= 0 else []


def convert_basis(family: str, n: int, m: int, parity: str,
                  t_source: Number, t_target: Number) -> List[ConversionTerm]:
    """把参数 t_target 上的 (n, m, parity) 元素展开为参数 t_source 上同族元素的有限组合"""
    _check_index(family, n, m, parity)
    t_source = to_rational(t_source)
    t_target = to_rational(t_target)
    terms = []
    for k in _source_degrees(family, n, m):
        coeff = _conversion_coefficient(family, n, m, k, t_source, t_target)
        if coeff != 0:
            terms.append(ConversionTerm(n - 2 * k, m, parity, coeff))
    logger.debug(f"{family}[{n},{m},{parity}] t={t_target} -> t={t_source}: {len(terms)} 项")
    return terms


@dataclass
class ConversionMatrix:
    """固定 m 的变换矩阵，行为目标次数，列为源次数"""
    family: str
    m: int
    t_source: Rational
    t_target: Rational
    degrees: List[int]
    entries: Dict[Tuple[int, int], Rational] = field(default_factory=dict)

    def entry(self, n: int, source_n: int) -> Rational:
        return self.entries.get((n, source_n), ZERO)

    def to_domain_matrix(self) -> DomainMatrix:
        rows = [[to_qq(self.entry(n, j)) for j in self.degrees] for n in self.degrees]
        return DomainMatrix(rows, (len(self.degrees), len(self.degrees)), QQ)

    def is_unit_lower_triangular(self) -> bool:
        for i, n in enumerate(self.degrees):
            for j, source_n in enumerate(self.degrees):
                value = self.entry(n, source_n)
                if i == j and value != 1:
                    return False
                if j > i and value != 0:
                    return False
        return True

    def __matmul__(self, other: 'ConversionMatrix') -> 'ConversionMatrix':
        """self: t_target ← 中间参数，other: 中间参数 ← t_source"""
        if self.degrees != other.degrees or self.m != other.m:
            raise ValueError("矩阵的次数范围不一致")
        product = self.to_domain_matrix() * other.to_domain_matrix()
        rows = product.to_Matrix().tolist()
        entries = {}
        for i, n in enumerate(self.degrees):
            for j, source_n in enumerate(self.degrees):
                if rows[i][j] != 0:
                    entries[(n, source_n)] = Rational(rows[i][j])
        return ConversionMatrix(self.family, self.m, other.t_source, self.t_target,
                                list(self.degrees), entries)


def conversion_matrix(family: str, m: int, t_source: Number, t_target: Number,
                      max_degree: int) -> ConversionMatrix:
    degrees = list(range(m, max_degree + 1))
    matrix = ConversionMatrix(family, m, to_rational(t_source), to_rational(t_target), degrees)
    for n in degrees:
        for term in convert_basis(family, n, m, "+", t_source, t_target):
            if term.n >= m:
                matrix.entries[(n, term.n)] = term.coefficient
    return matrix
