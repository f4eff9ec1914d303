"""
验证套件 - 把各条恒等式与正交性断言作为精确事实逐一检查
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence

import numpy as np
from sympy import Rational, sqrt

from core.basis import BasisManager
from core.contragenic import (MonogenicIndex, PsiCombo, ambigenic, ambigenic_explicit,
                              contragenic, contragenic_dimension, contragenic_expansion,
                              contragenic_explicit, expansion_value,
                              intersection_report, monogenic, monogenic_explicit, vza_split)
from core.convert import (coef_U0_to_Umu, coef_U0_to_Vmu, coef_U_to_U, coef_Umu_from_Vmu,
                          coef_Umu_from_Vmu_by_inversion,
                          coef_V0_from_Vmu, coef_V_to_V, coef_Vhat_to_U0, coef_Vmu_from_Umu,
                          coef_W, coef_W_sum, convert_basis)
from core.errors import UnknownSuiteError
from core.exact import to_rational
from core.harmonics import (HarmonicIndex, eval_via_coords, garabedian_harmonic,
                            spherical_solid_harmonic, spheroidal_solid_harmonic)
from core.integrals import (garabedian_norm_closed_form, garabedian_norm_polynomial, gram,
                            inner_product, squared_norm)
from core.poly import linear_combination
from core.rquat import dirac, qsum

DEFAULT_T_VALUES = ("1/4", "9/16", "-1", "-3")


@dataclass
class SuiteConfig:
    max_degree: Optional[int] = None
    t_values: Sequence = DEFAULT_T_VALUES
    seed: int = 20240101
    samples: int = 100
    intersection_degree: Optional[int] = None


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: int
    counterexample: Optional[Dict] = None
    details: Dict = field(default_factory=dict)

    def to_json(self) -> Dict:
        payload = {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }
        if self.details:
            payload["details"] = self.details
        return payload


def _indices(n: int, top: int):
    for m in range(top + 1):
        for parity in ("+", "-") if m > 0 else ("+",):
            yield m, parity


class BaseSuite:
    """基础验证套件"""

    name = "base"
    default_degree = 4

    def __init__(self, manager: BasisManager, config: SuiteConfig):
        self.manager = manager
        self.config = config
        self.logger = logging.getLogger(__name__)
        self.max_degree = config.max_degree if config.max_degree is not None else self.default_degree
        self.t_values = [to_rational(t) for t in config.t_values]
        self.checks = 0
        self.failures = 0
        self.counterexample = None
        self.details = {}

    @property
    def nonzero_t(self) -> List[Rational]:
        return [t for t in self.t_values if t != 0]

    def check(self, condition: bool, identity: str, **context) -> bool:
        self.checks += 1
        if not condition:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = {"identity": identity,
                                       **{k: str(v) for k, v in context.items()}}
                self.logger.warning(f"[{self.name}] 反例: {self.counterexample}")
        return condition

    def run(self) -> SuiteResult:
        start = time.perf_counter()
        self.logger.info(f"[{self.name}] 开始，最高次数 {self.max_degree}")
        self.execute()
        elapsed = time.perf_counter() - start
        self.logger.info(f"[{self.name}] 完成 {self.checks} 项检查，失败 {self.failures}，用时 {elapsed:.2f}s")
        return SuiteResult(self.name, self.failures == 0, self.checks, self.failures,
                           self.counterexample, self.details)

    def execute(self):
        """执行检查（子类实现）"""
        raise NotImplementedError


class BBSSuite(BaseSuite):
    """U[t] 的构造：调和性、次数、球面上的 Appell 性质与球面展开"""

    name = "bbs"
    default_degree = 8

    def execute(self):
        for n in range(self.max_degree + 1):
            for m, parity in _indices(n, n):
                idx = HarmonicIndex(n, m, parity)
                ball = spherical_solid_harmonic(idx)
                self.check(ball.laplacian().is_zero(), "ΔU[0]=0", index=idx.label)
                self.check(ball.is_homogeneous() and ball.degree == n, "U[0] 为 n 次齐次多项式", index=idx.label)
                if n >= 1 and m <= n - 1:
                    lower = spherical_solid_harmonic(HarmonicIndex(n - 1, m, parity))
                    self.check(ball.partial_derivative(0) == lower.scale(n + m),
                               "∂0 U_{n,m}[0] = (n+m) U_{n-1,m}[0]", index=idx.label)
                for t in self.t_values:
                    u = spheroidal_solid_harmonic(idx, t)
                    expansion = linear_combination(
                        (coef_U_to_U(n, m, k) * t ** k, spherical_solid_harmonic(HarmonicIndex(n - 2 * k, m, parity)))
                        for k in range((n - m) // 2 + 1))
                    self.check(u == expansion, "U[t] = Σ c t^k U[0]", index=idx.label, t=t)
                    self.check(u.laplacian().is_zero(), "ΔU[t]=0", index=idx.label, t=t)
                    self.check(u.degree == n, "deg U[t] = n", index=idx.label, t=t)
                    v = garabedian_harmonic(idx, t)
                    self.check(v.laplacian().is_zero(), "ΔV[t]=0", index=idx.label, t=t)


class RoundTripSuite(BaseSuite):
    """U[0] 与 U[t] 的双向展开互逆"""

    name = "roundtrip"
    default_degree = 8

    def execute(self):
        for n in range(self.max_degree + 1):
            for m, parity in _indices(n, n):
                for k in range((n - m) // 2 + 1):
                    total = sum((coef_U_to_U(n, m, l) * coef_U0_to_Umu(n - 2 * l, m, k - l)
                                 for l in range(k + 1)), Rational(0))
                    self.check(total == (1 if k == 0 else 0), "Σ c c⁰ = δ", n=n, m=m, k=k)
                ball = spherical_solid_harmonic(HarmonicIndex(n, m, parity))
                for t in self.t_values:
                    expansion = linear_combination(
                        (coef_U0_to_Umu(n, m, k) * t ** k,
                         spheroidal_solid_harmonic(HarmonicIndex(n - 2 * k, m, parity), t))
                        for k in range((n - m) // 2 + 1))
                    self.check(ball == expansion, "U[0] = Σ c⁰ t^k U[t]",
                               index=f"{n},{m},{parity}", t=t)


class VFromUSuite(BaseSuite):
    """V 与 U 之间的四种展开"""

    name = "vfromu"
    default_degree = 8

    def execute(self):
        for n in range(self.max_degree + 1):
            for m in range(n + 1):
                for k in range((n - m) // 2 + 1):
                    self.check(coef_Umu_from_Vmu(n, m, k) == coef_Umu_from_Vmu_by_inversion(n, m, k),
                               "两项逆公式 = 三角形逆推", n=n, m=m, k=k)
        for n in range(self.max_degree + 1):
            for m, parity in _indices(n, n):
                ball = lambda j: spherical_solid_harmonic(HarmonicIndex(j, m, parity))
                for t in self.t_values:
                    v = garabedian_harmonic(HarmonicIndex(n, m, parity), t)
                    u = lambda j: spheroidal_solid_harmonic(HarmonicIndex(j, m, parity), t)
                    vv = lambda j: garabedian_harmonic(HarmonicIndex(j, m, parity), t)
                    label = f"{n},{m},{parity}"
                    same = linear_combination((coef_Vmu_from_Umu(n, m, k) * t ** k, u(n - 2 * k))
                                              for k in range((n - m) // 2 + 1))
                    self.check(v == same, "V[t] = Σ coef t^k U[t]", index=label, t=t)
                    from_ball = linear_combination((coef_Vhat_to_U0(n, m, k) * t ** k, ball(n - 2 * k))
                                                   for k in range((n - m + 1) // 2 + 1) if n - 2 * k >= m)
                    self.check(v == from_ball, "V[t] = Σ č t^k U[0]", index=label, t=t)
                    inverse = linear_combination((coef_Umu_from_Vmu(n, m, k) * t ** k, vv(n - 2 * k))
                                                 for k in range((n - m) // 2 + 1))
                    self.check(u(n) == inverse, "U[t] = Σ coef t^k V[t]", index=label, t=t)
                    back = linear_combination((coef_U0_to_Vmu(n, m, k) * t ** k, vv(n - 2 * k))
                                              for k in range((n - m) // 2 + 1))
                    self.check(ball(n) == back, "U[0] = Σ č⁰ t^k V[t]", index=label, t=t)


class CVVSuite(BaseSuite):
    """Garabedian 函数在两个参数之间的变换系数"""

    name = "cvv"
    default_degree = 8

    def execute(self):
        pairs = [(a, b) for a, b in product(self.t_values, self.nonzero_t) if a != b]
        for n in range(self.max_degree + 1):
            for m in range(n + 1):
                for k in range(min(n - m + 1, n) // 2 + 1):
                    for t_target, t_source in pairs:
                        self.check(coef_W(n, m, k, t_target, t_source) == coef_W_sum(n, m, k, t_target, t_source),
                                   "超几何闭式 = 双重求和", n=n, m=m, k=k, t_target=t_target, t_source=t_source)
                    for t in self.nonzero_t:
                        self.check(coef_W(n, m, k, t, 0) == coef_V_to_V(n, m, k) * t ** k,
                                   "w(t̃, 0) = ĉ t̃^k", n=n, m=m, k=k, t=t)
                        self.check(coef_W(n, m, k, 0, t) == coef_V0_from_Vmu(n, m, k) * t ** k,
                                   "w(0, t) = ĉ⁰ t^k", n=n, m=m, k=k, t=t)
                    self._check_ladder(n, m, k, pairs)
                for parity in ("+", "-") if m > 0 else ("+",):
                    for t_target, t_source in pairs:
                        target = garabedian_harmonic(HarmonicIndex(n, m, parity), t_target)
                        expansion = linear_combination(
                            (coef_W(n, m, k, t_target, t_source),
                             garabedian_harmonic(HarmonicIndex(n - 2 * k, m, parity), t_source))
                            for k in range((n - m) // 2 + 1))
                        self.check(target == expansion, "V[t̃] = Σ w V[t]",
                                   index=f"{n},{m},{parity}", t_target=t_target, t_source=t_source)

    def _check_ladder(self, n, m, k, pairs):
        for t_target, t_source in pairs:
            middle = coef_W(n, m, k, t_target, t_source)
            if m >= 1:
                lower = coef_W(n, m - 1, k, t_target, t_source)
                self.check(Rational(n + m + 1, n + m - 2 * k + 1) * lower == middle,
                           "梯子恒等式 (m-1)", n=n, m=m, k=k, t_target=t_target, t_source=t_source)
            if 2 * k <= n - m - 1:
                upper = coef_W(n, m + 1, k, t_target, t_source)
                self.check(Rational(n + m - 2 * k + 2, n + m + 2) * upper == middle,
                           "梯子恒等式 (m+1)", n=n, m=m, k=k, t_target=t_target, t_source=t_source)


class MonogenicSuite(BaseSuite):
    """单演性、显式公式与 Ψ e3 关系"""

    name = "monogenic"
    default_degree = 6

    def execute(self):
        for t in [Rational(0)] + self.t_values:
            for n in range(self.max_degree + 1):
                for m, parity in _indices(n, n + 1):
                    idx = MonogenicIndex(n, m, parity)
                    x = monogenic(idx, t)
                    self.check(dirac(x, conjugated=False).is_zero(), "∂X = 0", index=idx.label, t=t)
                    self.check(dirac(x.conjugate(), conjugated=True).is_zero(), "∂̄X̄ = 0", index=idx.label, t=t)
                    self.check(x.is_reduced(), "X 为约化四元数", index=idx.label, t=t)
                    self.check(x == monogenic_explicit(idx, t), "X = 显式 V 组合", index=idx.label, t=t)
                    self.check(ambigenic(idx, t) == ambigenic_explicit(idx, t), "A = 显式 VΨ 组合",
                               index=idx.label, t=t)
                    self.check(x.sc() == garabedian_harmonic(HarmonicIndex(n, m, parity), t),
                               "Sc X = V", index=idx.label, t=t)
                    if m == 0:
                        continue
                    for sign, factor in (("+", 1), ("-", -1)):
                        psi = PsiCombo(sign, m, parity).apply(n, t)
                        partner = PsiCombo(sign, m, "-" if parity == "+" else "+").apply(n, t)
                        expected = partner.scale(factor * (1 if parity == "+" else -1))
                        self.check(psi.times_e3() == expected, "VΨ e3 关系", sign=sign, index=idx.label, t=t)


class OrthogonalitySuite(BaseSuite):
    """V、X 族的 Gram 矩阵为正对角阵"""

    name = "orthogonality"
    default_degree = 6

    def execute(self):
        for t in [Rational(0)] + self.t_values:
            for family in ("V", "X"):
                matrix = gram(self.manager.elements(family, self.max_degree, t), t)
                witness = matrix.off_diagonal_witness()
                self.check(witness is None, f"{family} 族 Gram 为对角阵", t=t, witness=witness)
                positive = all(matrix.entries[i][i] > 0 for i in range(matrix.size))
                self.check(positive, f"{family} 族对角元为正", t=t)
            for n in range(self.max_degree + 1):
                for m in range(1, n + 1):
                    plus = garabedian_harmonic(HarmonicIndex(n, m, "+"), t)
                    minus = garabedian_harmonic(HarmonicIndex(n, m, "-"), t)
                    self.check(inner_product(plus, plus, t) == inner_product(minus, minus, t),
                               "‖V⁺‖ = ‖V⁻‖", n=n, m=m, t=t)


class ConversionSuite(BaseSuite):
    """U、V、X、X̄ 在不同参数之间的展开为精确恒等式"""

    name = "conversion"
    default_degree = 6

    def execute(self):
        values = [Rational(0)] + self.t_values
        pairs = [(a, b) for a, b in product(values, values) if a != b]
        for family in ("U", "V", "X", "Xbar"):
            scalar = family in ("U", "V")
            for n in range(self.max_degree + 1):
                top = n if family == "U" else (n if family == "V" else n + 1)
                for m, parity in _indices(n, top):
                    for t_target, t_source in pairs:
                        target = self.manager.element(family, n, m, parity, t_target)
                        terms = convert_basis(family, n, m, parity, t_source, t_target)
                        parts = [(term.coefficient, self.manager.element(family, term.n, term.m, term.parity, t_source))
                                 for term in terms]
                        value = linear_combination(parts) if scalar else qsum(parts)
                        self.check(target == value, f"{family}[t̃] = Σ coef {family}[t]",
                                   index=f"{n},{m},{parity}", t_target=t_target, t_source=t_source)


class ContragenicSuite(BaseSuite):
    """反演函数与全部单演、反单演函数正交，且自身两两正交"""

    name = "contragenic"
    default_degree = 6

    def execute(self):
        for t in [Rational(0)] + self.t_values:
            monogenics = self.manager.elements("X", self.max_degree, t)
            contragenics = self.manager.elements("Z", self.max_degree, t)
            for z_label, z in contragenics:
                n, m, parity = _parse_label(z_label)
                self.check(z == contragenic_explicit(n, m, parity, t), "Z = 显式 VΨ 组合", index=z_label, t=t)
                self.check(z.sc().is_zero() and z.is_reduced(), "Z 取值于 e1, e2", index=z_label, t=t)
                self.check(all(c.laplacian().is_zero() for c in z.components()), "ΔZ = 0", index=z_label, t=t)
                for x_label, x in monogenics:
                    value = inner_product(z, x, t)
                    self.check(value.is_zero(), "⟨Z, X⟩ = 0", z=z_label, x=x_label, t=t, value=value)
                    value = inner_product(z, x.conjugate(), t)
                    self.check(value.is_zero(), "⟨Z, X̄⟩ = 0", z=z_label, x=x_label, t=t, value=value)
            matrix = gram(contragenics, t)
            self.check(matrix.is_diagonal(), "Z 族 Gram 为对角阵", t=t, witness=matrix.off_diagonal_witness())
        dimension_degree = min(self.max_degree, 5)
        for n in range(1, dimension_degree + 1):
            for t in sorted(set([Rational(0)] + self.t_values)):
                report = contragenic_dimension(n, t)
                self.check(report["contragenic_dim"] == n * n, "dim N = n²", n=n, t=t,
                           dim=report["contragenic_dim"])
                self.check(report["combined_rank"] == report["harmonic_dim"], "A ⊕ Z 张成调和空间", n=n, t=t)


class DecompositionSuite(BaseSuite):
    """VΨ 组合的 Z/A 拆分以及 Z 在参数变换下的展开"""

    name = "decomposition"
    default_degree = 5

    def execute(self):
        values = [Rational(0)] + self.t_values
        for t in values:
            for n in range(self.max_degree + 1):
                for m, parity in _indices(n, n + 1):
                    if m < 1:
                        continue
                    for which, sign, order in (("lower", "-", m - 1), ("upper", "+", m + 1)):
                        z_part, a_part = vza_split(n, m, parity, t, which)
                        psi = PsiCombo(sign, order, parity).apply(n, t)
                        self.check(z_part + a_part == psi, f"VΨ 拆分 ({which})",
                                   index=f"{n},{m},{parity}", t=t)
        pairs = [(a, b) for a, b in product(values, values) if a != b]
        for n in range(1, self.max_degree + 1):
            for m, parity in _indices(n, n - 1):
                for t_target, t_source in pairs:
                    target = contragenic(n, m, parity, t_target)
                    terms = contragenic_expansion(n, m, parity, t_target, t_source)
                    self.check(target == expansion_value(terms, t_source), "Z[t̃] = Σ zC Z[t] + zA A[t]",
                               index=f"{n},{m},{parity}", t_target=t_target, t_source=t_source)


class IntersectionSuite(BaseSuite):
    """普适反演函数与 t = 0 上单演函数的正交关系"""

    name = "intersection"
    default_degree = 6

    @property
    def degrees(self) -> List[int]:
        if self.config.intersection_degree is not None:
            return [self.config.intersection_degree]
        return list(range(1, self.max_degree + 1))

    def execute(self):
        reports = []
        for t in self.nonzero_t:
            for n in self.degrees:
                report = intersection_report(n, t)
                self.check(report.part_i_holds, "⟨Z_{n,0}[t], X⟩_0 = 0", n=n, t=t,
                           detail=report.part_i_counterexample)
                self.check(report.part_ii_holds, "1 ≤ m ≤ n-1 存在非零见证", n=n, t=t)
                self.check(report.universal_rank >= n, "普适子空间维数 ≥ n", n=n, t=t)
                reports.append(report.to_json())
        self.details["reports"] = reports


class NormsSuite(BaseSuite):
    """Garabedian 范数闭式与直接积分一致"""

    name = "norms"
    default_degree = 5

    def execute(self):
        for t in [Rational(0)] + self.t_values:
            rational_root = t > 0 and sqrt(t).is_Rational
            for n in range(self.max_degree + 1):
                for m, parity in _indices(n, n):
                    v = garabedian_harmonic(HarmonicIndex(n, m, parity), t)
                    direct = squared_norm(v, t)
                    self.check(direct.coeff > 0, "‖V‖² > 0", n=n, m=m, t=t)
                    self.check(garabedian_norm_polynomial(n, m, t, parity) == direct,
                               "闭式多项式 = 直接积分", n=n, m=m, parity=parity, t=t)
                    if rational_root:
                        self.check(garabedian_norm_closed_form(n, m, t, parity) == direct,
                                   "闭式 = 直接积分", n=n, m=m, parity=parity, t=t)


class CoordsSuite(BaseSuite):
    """长球坐标公式与多项式求值的浮点交叉检验"""

    name = "coords"
    default_degree = 5

    def execute(self):
        rng = np.random.default_rng(self.config.seed)
        prolate = [t for t in self.t_values if t > 0] or [Rational(1, 4)]
        for t in prolate:
            for n in range(self.max_degree + 1):
                for m, parity in _indices(n, n):
                    idx = HarmonicIndex(n, m, parity)
                    u = rng.uniform(0.0, np.pi, self.config.samples)
                    v = rng.uniform(0.05, 1.5, self.config.samples)
                    phi = rng.uniform(0.0, 2 * np.pi, self.config.samples)
                    from_coords = eval_via_coords(idx, t, (u, v, phi))
                    mu = float(sqrt(t))
                    x0 = mu * np.cos(u) * np.cosh(v)
                    x1 = mu * np.sin(u) * np.sinh(v) * np.cos(phi)
                    x2 = mu * np.sin(u) * np.sinh(v) * np.sin(phi)
                    from_poly = spheroidal_solid_harmonic(idx, t).evaluate_float(x0, x1, x2)
                    error = np.abs(from_coords - from_poly)
                    close = np.all(error <= 1e-10 * np.maximum(np.abs(from_poly), 1.0))
                    worst = float(np.max(error)) if len(u) else 0.0
                    self.check(bool(close),"坐标公式 = 多项式求值", index=idx.label, t=t, max_error=worst)


def _parse_label(label: str):
    inner = label[label.index("[") + 1:label.index("]")]
    n, m, parity = inner.split(",")
    return int(n), int(m), parity


SUITES = {suite.name: suite for suite in (
    BBSSuite, RoundTripSuite, VFromUSuite, CVVSuite, MonogenicSuite, OrthogonalitySuite,
    ConversionSuite, ContragenicSuite, DecompositionSuite, IntersectionSuite, NormsSuite, CoordsSuite,
)}


def resolve_suites(names: Sequence[str]) -> List[str]:
    """展开 'all' 并检查名称"""
    resolved = []
    for name in names:
        name = name.strip()
        if name == "all":
            resolved.extend(n for n in SUITES if n not in resolved)
        elif name in SUITES:
            if name not in resolved:
                resolved.append(name)
        else:
            raise UnknownSuiteError(f"未知的验证套件: {name!r}，可选: {', '.join(SUITES)}, all")
    if not resolved:
        raise UnknownSuiteError("未指定验证套件")
    return resolved


def run_suites(names: Sequence[str], config: SuiteConfig,
               manager: Optional[BasisManager] = None) -> List[SuiteResult]:
    manager = manager or BasisManager()
    return [SUITES[name](manager, config).run() for name in resolve_suites(names)]
