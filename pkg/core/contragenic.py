"""
单演函数与反单演函数 - X、X̄、双演函数 A 以及反演函数 Z

X_{n,m}^±[t] = ∂̄ U_{n+1,m}^±[t]，A = X - X̄ = 2 Vec X，
Z 为与全部双演函数正交的向量值调和多项式。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from core.convert import coef_W
from core.errors import IndexRangeError, UnsupportedParameterError
from core.exact import Number, format_rational, to_rational
from core.harmonics import SpheroidParam, garabedian_or_zero, harmonic_or_zero
from core.integrals import inner_product
from core.rquat import QPoly, dirac, qsum

logger = logging.getLogger(__name__)

ZERO = Rational(0)
NuRatio = Rational


def _flip(parity: str) -> str:
    return "-" if parity == "+" else "+"


def _sign(parity: str) -> int:
    return 1 if parity == "+" else -1


def _t(sp) -> Rational:
    return SpheroidParam.of(sp).t


@dataclass(frozen=True)
class MonogenicIndex:
    """单演函数指标，0 ≤ m ≤ n + 1"""
    n: int
    m: int
    parity: str = "+"

    def __post_init__(self):
        if self.n < 0 or self.m < 0 or self.m > self.n + 1:
            raise IndexRangeError(f"单演函数要求 0 ≤ m ≤ n + 1: ({self.n}, {self.m})")
        if self.parity not in ("+", "-") or (self.parity == "-" and self.m == 0):
            raise IndexRangeError(f"奇偶性无效: ({self.n}, {self.m}, {self.parity})")

    @property
    def label(self) -> str:
        return f"{self.n},{self.m},{self.parity}"


@dataclass(frozen=True)
class PsiCombo:
    """V_{n,m} Ψ_{sign,m}^{parity}：sign='+' 为 V^σ e1 + σV^{-σ} e2，sign='-' 为 V^σ e1 - σV^{-σ} e2"""
    sign: str
    m: int
    parity: str

    def apply(self, n: int, sp) -> QPoly:
        t = _t(sp)
        if self.m < 0:
            return QPoly.zero()
        sigma = _sign(self.parity) * (1 if self.sign == "+" else -1)
        same = garabedian_or_zero(n, self.m, self.parity, t)
        other = garabedian_or_zero(n, self.m, _flip(self.parity), t)
        return QPoly(v1=same, v2=other.scale(sigma))


def psi_combo(n: int, m: int, sign: str, parity: str, sp) -> QPoly:
    return PsiCombo(sign, m, parity).apply(n, sp)


# 单演函数

@lru_cache(maxsize=None)
def _monogenic(n: int, m: int, parity: str, t: Rational) -> QPoly:
    potential = harmonic_or_zero(n + 1, m, parity, t)
    return dirac(QPoly.scalar(potential), conjugated=True)


def monogenic(idx: MonogenicIndex, sp) -> QPoly:
    """X_{n,m}^±[t]，标量部分为 V_{n,m}^±[t]"""
    return _monogenic(idx.n, idx.m, idx.parity, _t(sp))


def antimonogenic(idx: MonogenicIndex, sp) -> QPoly:
    return monogenic(idx, sp).conjugate()


def ambigenic(idx: MonogenicIndex, sp) -> QPoly:
    """A = X - X̄ = 2 Vec X"""
    return _ambigenic(idx.n, idx.m, idx.parity, _t(sp))


@lru_cache(maxsize=None)
def _ambigenic(n: int, m: int, parity: str, t: Rational) -> QPoly:
    if n < 0 or m < 0 or m > n + 1 or (parity == "-" and m == 0):
        return QPoly.zero()
    return _monogenic(n, m, parity, t).vec().scale(2)


def ambigenic_explicit(idx: MonogenicIndex, sp) -> QPoly:
    """由 V 与 Ψ 直接组合的 A"""
    n, m, parity = idx.n, idx.m, idx.parity
    a = n + m + 1
    b = Rational(1, n + m + 2)
    upper = psi_combo(n, m + 1, "+", parity, sp)
    if m == 0:
        return upper.scale(-2 * b)
    lower = psi_combo(n, m - 1, "-", parity, sp)
    return lower.scale(a) - upper.scale(b)


def monogenic_explicit(idx: MonogenicIndex, sp) -> QPoly:
    """X = V + A/2"""
    scalar = QPoly.scalar(garabedian_or_zero(idx.n, idx.m, idx.parity, _t(sp)))
    return scalar + ambigenic_explicit(idx, sp).scale(Rational(1, 2))


# 反演函数

@lru_cache(maxsize=None)
def _nu(n: int, m: int, t: Rational) -> Rational:
    if m == 0:
        return Rational(1)
    if m >= n:
        return ZERO
    upper = garabedian_or_zero(n, m + 1, "+", t)
    lower = garabedian_or_zero(n, m - 1, "+", t)
    weight = 2 if m == 1 else 1
    ratio = inner_product(upper, upper, t) / inner_product(lower, lower, t)
    return weight * ratio / ((n + m + 1) * (n + m + 2)) ** 2


def nu_ratio(n: int, m: int, sp) -> NuRatio:
    """ν_{n,m}[t]：m = 0 为 1，m ≥ n 为 0"""
    if n < 0 or m < 0:
        raise IndexRangeError(f"ν 的指标无效: ({n}, {m})")
    return _nu(n, m, _t(sp))


@lru_cache(maxsize=None)
def _contragenic(n: int, m: int, parity: str, t: Rational) -> QPoly:
    if n < 1 or m < 0 or m >= n or (parity == "-" and m == 0):
        return QPoly.zero()
    if m == 0:
        return -_ambigenic(n, 0, "+", t).times_e3()
    nu = _nu(n, m, t)
    same = _ambigenic(n, m, parity, t)
    other = _ambigenic(n, m, _flip(parity), t)
    first = same.times_e3().scale(-_sign(parity) * (nu + 1))
    return (first + other.scale(nu - 1)).scale(Rational(1, 2))


def contragenic(n: int, m: int, parity: str, sp) -> QPoly:
    """Z_{n,m}^±[t]，n ≥ 1，0 ≤ m ≤ n - 1"""
    if n < 1 or m < 0 or m > n - 1:
        raise IndexRangeError(f"反演函数要求 n ≥ 1 且 0 ≤ m ≤ n - 1: ({n}, {m})")
    if parity not in ("+", "-") or (parity == "-" and m == 0):
        raise IndexRangeError(f"奇偶性无效: ({n}, {m}, {parity})")
    return _contragenic(n, m, parity, _t(sp))


def contragenic_or_zero(n: int, m: int, parity: str, sp) -> QPoly:
    """m ≥ n 时取 0 的延拓"""
    return _contragenic(n, m, parity, _t(sp))


def contragenic_explicit(n: int, m: int, parity: str, sp) -> QPoly:
    """Z^± = (n+m+1)ν V Ψ_{-,m-1}^∓ + V Ψ_{+,m+1}^∓ / (n+m+2)"""
    if m == 0:
        return psi_combo(n, 1, "+", "-", sp).scale(Rational(2, n + 2))
    nu = nu_ratio(n, m, sp)
    lower = psi_combo(n, m - 1, "-", _flip(parity), sp)
    upper = psi_combo(n, m + 1, "+", _flip(parity), sp)
    return lower.scale((n + m + 1) * nu) + upper.scale(Rational(1, n + m + 2))


def contragenic_norm(n: int, m: int, parity: str, sp):
    z = contragenic(n, m, parity, sp)
    return inner_product(z, z, sp)


def vza_split(n: int, m: int, parity: str, sp, which: str) -> Tuple[QPoly, QPoly]:
    """
    把 V Ψ 组合拆成 (反演部分, 双演部分)：
    which='lower' 对应 V_{n,m-1}Ψ_{-,m-1}^±，which='upper' 对应 V_{n,m+1}Ψ_{+,m+1}^±。
    """
    if m < 1 or m > n + 1:
        raise IndexRangeError(f"拆分要求 1 ≤ m ≤ n + 1: ({n}, {m})")
    nu = nu_ratio(n, m, sp)
    z = contragenic_or_zero(n, m, _flip(parity), sp)
    a = ambigenic(MonogenicIndex(n, m, parity), sp)
    if which == "lower":
        factor = 1 / ((n + m + 1) * (nu + 1))
        return z.scale(factor), a.scale(factor)
    if which == "upper":
        factor = Rational(n + m + 2) / (nu + 1)
        return z.scale(factor), a.scale(-nu * factor)
    raise ValueError(f"未知的拆分: {which}")


# 参数变换下的分解

def coef_Z_decomp(n: int, m: int, k: int, t_target: Number, t_source: Number) -> Tuple[Rational, Rational]:
    """Z^s[t̃] = Σ zC Z_{n-2k,m}^s[t] + zA A_{n-2k,m}^{-s}[t] 的系数 (zC, zA)"""
    t_target = to_rational(t_target)
    t_source = to_rational(t_source)
    if k < 0 or n < 1 or m < 0:
        return ZERO, ZERO
    if m == 0:
        if 2 * k > n - 1:
            return ZERO, ZERO
        w = coef_W(n, 1, k, t_target, t_source)
        return Rational(n - 2 * k + 2, n + 2) * w, ZERO
    if 2 * k > n - m + 1:
        return ZERO, ZERO
    w = coef_W(n, m, k, t_target, t_source)
    nu_target = _nu(n, m, t_target)
    nu_source = _nu(n - 2 * k, m, t_source)
    if 2 * k <= n - m - 1:
        z_c = w * (nu_target + 1) / (nu_source + 1)
        z_a = w * (nu_target - nu_source) / (nu_source + 1)
        return z_c, z_a
    value = w * nu_target / (nu_source + 1)
    return value, value


@dataclass(frozen=True)
class DecompositionTerm:
    kind: str  # 'Z' 或 'A'
    n: int
    m: int
    parity: str
    coefficient: Rational


def contragenic_expansion(n: int, m: int, parity: str,
                          t_target: Number, t_source: Number) -> List[DecompositionTerm]:
    """Z_{n,m}^s[t̃] 在参数 t 上的反演/双演展开"""
    if n < 1 or m < 0 or m > n - 1:
        raise IndexRangeError(f"反演函数要求 n ≥ 1 且 0 ≤ m ≤ n - 1: ({n}, {m})")
    terms = []
    for k in range((n - m + 1) // 2 + 1):
        z_c, z_a = coef_Z_decomp(n, m, k, t_target, t_source)
        degree = n - 2 * k
        if z_c != 0 and degree >= 1 and m <= degree - 1:
            terms.append(DecompositionTerm("Z", degree, m, parity, z_c))
        if z_a != 0 and degree >= 0 and m <= degree + 1:
            terms.append(DecompositionTerm("A", degree, m, _flip(parity), z_a))
    return terms


def expansion_value(terms: List[DecompositionTerm], sp) -> QPoly:
    """按展开式重新组合出多项式"""
    parts = []
    for term in terms:
        if term.kind == "Z":
            element = contragenic(term.n, term.m, term.parity, sp)
        else:
            element = ambigenic(MonogenicIndex(term.n, term.m, term.parity), sp)
        parts.append((term.coefficient, element))
    return qsum(parts)


# 与球面单演函数的交

def ball_monogenics(max_degree: int) -> List[Tuple[str, QPoly]]:
    """t = 0 上次数 ≤ max_degree 的 X 与 X̄"""
    result = []
    for k in range(max_degree + 1):
        for m in range(k + 2):
            for parity in ("+", "-") if m > 0 else ("+",):
                x = monogenic(MonogenicIndex(k, m, parity), 0)
                result.append((f"X[{k},{m},{parity}]", x))
                result.append((f"Xbar[{k},{m},{parity}]", x.conjugate()))
    return result


def _vectorize(items: List[QPoly]) -> DomainMatrix:
    columns: Dict[Tuple[int, Tuple[int, int, int]], int] = {}
    rows = []
    for q in items:
        row = {}
        for c, comp in enumerate(q.components()):
            for exps, coeff in comp.element.items():
                key = (c, exps)
                if key not in columns:
                    columns[key] = len(columns)
                row[columns[key]] = coeff
        rows.append(row)
    width = max(len(columns), 1)
    dense = [[row.get(j, QQ.zero) for j in range(width)] for row in rows]
    return DomainMatrix(dense, (len(rows), width), QQ)


def exact_rank(items: List[QPoly]) -> int:
    if not items:
        return 0
    return _vectorize(items).rank()


def _spanning_ambigenics(n: int, sp) -> List[QPoly]:
    items = []
    for k in range(n + 1):
        for m in range(k + 2):
            for parity in ("+", "-") if m > 0 else ("+",):
                x = monogenic(MonogenicIndex(k, m, parity), sp)
                items.extend([x, x.conjugate()])
    return items


def _all_contragenics(n: int, sp) -> List[QPoly]:
    items = []
    for k in range(1, n + 1):
        for m in range(k):
            for parity in ("+", "-") if m > 0 else ("+",):
                items.append(contragenic(k, m, parity, sp))
    return items


def contragenic_dimension(n: int, sp) -> Dict[str, int]:
    """次数 ≤ n 的调和空间维数、双演子空间秩以及补空间维数"""
    ambigenic_rank = exact_rank(_spanning_ambigenics(n, sp))
    harmonic_dim = 3 * (n + 1) ** 2
    combined_rank = exact_rank(_spanning_ambigenics(n, sp) + _all_contragenics(n, sp))
    return {
        "degree": n,
        "harmonic_dim": harmonic_dim,
        "ambigenic_rank": ambigenic_rank,
        "contragenic_dim": harmonic_dim - ambigenic_rank,
        "combined_rank": combined_rank,
    }


@dataclass
class IntersectionReport:
    n: int
    t: Rational
    part_i_holds: bool
    part_i_counterexample: Optional[Dict] = None
    witnesses: Optional[List[Dict]] = None
    part_ii_holds: bool = True
    universal_rank: int = 0
    top_slice_projection: Optional[List[Dict]] = None

    def to_json(self) -> Dict:
        return {
            "n": self.n,
            "t": format_rational(self.t),
            "part_i_holds": self.part_i_holds,
            "part_i_counterexample": self.part_i_counterexample,
            "part_ii_holds": self.part_ii_holds,
            "witnesses": self.witnesses or [],
            "universal_rank": self.universal_rank,
            "top_slice_projection": self.top_slice_projection or [],
        }


def intersection_report(n: int, sp) -> IntersectionReport:
    """
    (i) Z_{n,0}[t] 在单位球上与全部 X、X̄（次数 ≤ n）正交；
    (ii) 1 ≤ m ≤ n-1 的 Z_{n,m}^±[t] 各自与某个 X 或 X̄ 不正交。
    """
    t = _t(sp)
    if t == 0:
        raise UnsupportedParameterError("交的报告要求 t ≠ 0")
    if n < 1:
        raise IndexRangeError(f"交的报告要求 n ≥ 1: {n}")
    monogenics = ball_monogenics(n)
    report = IntersectionReport(n=n, t=t, part_i_holds=True, witnesses=[])

    universal = contragenic(n, 0, "+", t)
    for label, x in monogenics:
        value = inner_product(universal, x, 0).coeff
        if value != 0:
            report.part_i_holds = False
            report.part_i_counterexample = {"against": label, "value": format_rational(value)}
            break

    for m in range(1, n):
        for parity in ("+", "-"):
            z = contragenic(n, m, parity, t)
            witness = None
            for label, x in monogenics:
                value = inner_product(z, x, 0).coeff
                if value != 0:
                    witness = {"m": m, "parity": parity, "against": label,
                               "value": format_rational(value)}
                    break
            if witness is None:
                report.part_ii_holds = False
                witness = {"m": m, "parity": parity, "against": None, "value": "0"}
            report.witnesses.append(witness)

    report.universal_rank = exact_rank([contragenic(k, 0, "+", t) for k in range(1, n + 1)])

    projection = []
    for m in range(n):
        for parity in ("+", "-") if m > 0 else ("+",):
            basis = contragenic(n, m, parity, 0)
            coeff = inner_product(universal, basis, 0) / inner_product(basis, basis, 0)
            projection.append({"m": m, "parity": parity, "coefficient": format_rational(coeff)})
    report.top_slice_projection = projection
    logger.info(f"交的报告 n={n} t={t}: (i)={report.part_i_holds} (ii)={report.part_ii_holds}")
    return report
