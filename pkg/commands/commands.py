"""
命令 - 各个子命令的实现，返回进程退出码
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, List, Optional

import numpy as np

from checks.suites import SuiteConfig, run_suites
from core.basis import FAMILIES, SCALAR_FAMILIES, BasisManager
from core.convert import Family, coefficient, CoeffQuery, convert_basis
from core.errors import ConfigError, UnsupportedRegimeError
from core.exact import format_rational
from core.harmonics import HarmonicIndex, SpheroidParam, coords_to_cartesian, eval_via_coords
from core.integrals import gram
from render.plot_image import PlotRenderer
from utils.formatting import element_rows, format_float
from utils.writers import OutputWriter

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

DEFAULT_MAX_DEGREE = 4


@dataclass
class RunConfig:
    """合并后的运行配置"""
    max_degree: Optional[int] = None
    t_values: List = field(default_factory=lambda: ["0"])
    format: str = "json"
    out: Optional[str] = None
    plot_grid: int = 41
    coords: str = "cartesian"

    def validate(self):
        if self.max_degree is not None and self.max_degree < 0:
            raise ConfigError(f"max_degree 不能为负: {self.max_degree}")
        if self.format not in OutputWriter.FORMATS:
            raise ConfigError(f"不支持的输出格式: {self.format}")
        if self.plot_grid < 0:
            raise ConfigError(f"plot_grid 不能为负: {self.plot_grid}")
        if self.coords not in ("cartesian", "spheroidal"):
            raise ConfigError(f"未知的坐标类型: {self.coords}")
        for t in self.t_values:
            SpheroidParam.of(t)

    @property
    def degree(self) -> int:
        return self.max_degree if self.max_degree is not None else DEFAULT_MAX_DEGREE


class BaseCommand:
    """基础命令类"""

    name = "base"

    def __init__(self, config: RunConfig, args: Any, manager: Optional[BasisManager] = None):
        self.config = config
        self.args = args
        self.manager = manager or BasisManager()
        self.writer = OutputWriter(config.format, config.out)
        self.logger = logging.getLogger(__name__)

    def run(self) -> int:
        """执行命令（子类实现）"""
        raise NotImplementedError

    def require_family(self, allowed) -> str:
        family = (getattr(self.args, "family", None) or "").strip()
        if not family:
            raise ConfigError("必须指定 --family")
        if family not in allowed:
            raise ConfigError(f"--family 必须是 {', '.join(allowed)} 之一: {family!r}")
        return family


class BasisCommand(BaseCommand):
    """输出基函数多项式"""

    name = "basis"

    def run(self) -> int:
        family = self.require_family(FAMILIES)
        blocks, rows = [], []
        for t in self.config.t_values:
            label_t = format_rational(t)
            elements = []
            for n, m, parity in self.manager.list_indices(family, self.config.degree):
                element = self.manager.element(family, n, m, parity, t)
                elements.append({"n": n, "m": m, "parity": parity, "poly": element.to_json()})
                for row in element_rows(element):
                    rows.append([label_t, family, n, m, parity] + row)
            blocks.append({"family": family, "t": label_t, "elements": elements})
        header = ["t", "family", "n", "m", "parity", "component", "e0", "e1", "e2", "coeff"]
        self.writer.write(blocks, header, rows)
        return EXIT_OK


class CoeffsCommand(BaseCommand):
    """输出变换系数表"""

    name = "coeffs"

    def run(self) -> int:
        family = Family(self.require_family([f.value for f in Family]))
        t_target = self.args.t_target if self.args.t_target is not None else "0"
        t_source = self.args.t_source if self.args.t_source is not None else "0"
        # 越界的 k 也输出一行，值为 0
        rows = []
        for n in range(self.config.degree + 1):
            for m in range(n + 1):
                for k in range((n + 1) // 2 + 1):
                    value = coefficient(CoeffQuery(n, m, k, family), t_target, t_source)
                    rows.append([n, m, k, format_rational(value)])
        payload = {"family": family.value, "rows": [dict(zip(("n", "m", "k", "value"), row)) for row in rows]}
        if family is Family.W_MUT_MU:
            payload["t_target"] = format_rational(t_target)
            payload["t_source"] = format_rational(t_source)
        self.writer.write(payload, ["n", "m", "k", "value"], rows)
        return EXIT_OK


class GramCommand(BaseCommand):
    """输出 Gram 矩阵（以 π 为单位）"""

    name = "gram"

    def run(self) -> int:
        family = self.require_family(FAMILIES)
        blocks, rows, labels = [], [], []
        for t in self.config.t_values:
            # Gram 矩阵元素以 π 为单位
            matrix = gram(self.manager.elements(family, self.config.degree, t), t)
            labels = matrix.labels
            entries = matrix.to_rows()
            blocks.append({"family": family, "t": format_rational(t), "unit": "pi",
                           "labels": labels, "entries": entries,
                           "rank": matrix.rank(), "diagonal": matrix.is_diagonal()})
            for label, row in zip(labels, entries):
                rows.append([format_rational(t), label] + row)
        self.writer.write(blocks, ["t", "index"] + labels, rows)
        return EXIT_OK


class ConvertCommand(BaseCommand):
    """输出单个元素在另一参数上的展开"""

    name = "convert"

    def run(self) -> int:
        family = self.require_family(("U", "V", "X", "Xbar"))
        args = self.args
        terms = convert_basis(family, args.n, args.m, args.parity, args.t_source, args.t_target)
        rows = [[term.n, term.m, term.parity, format_rational(term.coefficient)] for term in terms]
        payload = {
            "family": family,
            "index": {"n": args.n, "m": args.m, "parity": args.parity},
            "t_source": format_rational(args.t_source),
            "t_target": format_rational(args.t_target),
            "terms": [dict(zip(("n", "m", "parity", "coefficient"), row)) for row in rows],
        }
        self.writer.write(payload, ["n", "m", "parity", "coefficient"], rows)
        return EXIT_OK


class VerifyCommand(BaseCommand):
    """运行验证套件"""

    name = "verify"

    def run(self) -> int:
        names = (self.args.suite or "all").split(",")

        # --n 只影响 intersection 套件
        degree = getattr(self.args, "n", None)
        if degree is not None and degree < 1:
            raise ConfigError(f"--n 必须 ≥ 1: {degree}")
        suite_config = SuiteConfig(max_degree=self.config.max_degree, t_values=list(self.config.t_values),
                                   intersection_degree=degree)
        results = run_suites(names, suite_config, self.manager)

        # 汇总结果
        passed = all(result.passed for result in results)
        payload = {"passed": passed, "suites": [result.to_json() for result in results]}
        rows = [[r.name, str(r.passed).lower(), r.checks, r.failures,
                 json.dumps(r.counterexample, ensure_ascii=False) if r.counterexample else ""]
                for r in results]
        self.writer.write(payload, ["suite", "passed", "checks", "failures", "counterexample"], rows)
        if passed:
            self.logger.info("全部验证通过")
            return EXIT_OK
        self.logger.error("存在未通过的验证")
        return EXIT_FAILED


class PlotdataCommand(BaseCommand):
    """输出子午面 (φ = 0) 上的浮点采样，可选渲染 PNG"""

    name = "plotdata"

    def run(self) -> int:
        family = self.require_family(FAMILIES)
        args = self.args
        t = self.config.t_values[0]
        param = SpheroidParam.of(t)
        element = self.manager.element(family, args.n, args.m, args.parity, param)
        scalar = family in SCALAR_FAMILIES
        value_columns = ["value"] if scalar else ["s", "e1", "e2", "e3"]
        grid = self.config.plot_grid

        # 网格
        if self.config.coords == "spheroidal":
            if param.regime != "prolate":
                raise UnsupportedRegimeError(f"长球坐标要求 t > 0: t={param.t}")
            mu = float(param.mu)
            u, v = np.meshgrid(np.linspace(0.0, np.pi, grid),
                               np.linspace(0.0, float(np.arccosh(1.0 / mu)), grid))
            phi = np.zeros_like(u)
            x0, x1, x2 = coords_to_cartesian(param, u, v, phi)
            leading = [u, v, phi]
            header = ["u", "v", "phi", "x0", "x1", "x2"] + value_columns
            mask = np.ones_like(u, dtype=bool)
        else:
            semi_minor = float(np.sqrt(float(1 - param.t)))
            x1, x0 = np.meshgrid(np.linspace(semi_minor, -semi_minor, grid), np.linspace(-1.0, 1.0, grid),
                                 indexing='ij')
            x2 = np.zeros_like(x0)
            leading = []
            header = ["x0", "x1", "x2"] + value_columns
            mask = x0 ** 2 + x1 ** 2 / semi_minor ** 2 <= 1.0 + 1e-12

        # 求值
        if scalar:
            if family == "U" and self.config.coords == "spheroidal":
                values = [eval_via_coords(HarmonicIndex(args.n, args.m, args.parity), param, (u, v, phi))]
            else:
                values = [element.evaluate_float(x0, x1, x2)]
        else:
            values = [comp.evaluate_float(x0, x1, x2) for comp in element.components()]

        # 只保留落在旋转椭球内的点
        columns = leading + [x0, x1, x2] + values
        rows = []
        for position in zip(*np.nonzero(mask)):
            rows.append([format_float(column[position]) for column in columns])
        # 浮点采样始终输出 CSV
        self.writer.fmt = "csv"
        self.writer.write(None, header, rows)

        # 预览图
        if getattr(args, "png", None) and grid > 0:
            magnitude = values[0] if scalar else np.sqrt(sum(c ** 2 for c in values))
            picture = np.where(mask, magnitude, np.nan)
            PlotRenderer().save(picture, args.png, f"{family}[{args.n},{args.m},{args.parity}] t={param.t}")
        return EXIT_OK


COMMANDS = {command.name: command for command in (
    BasisCommand, CoeffsCommand, GramCommand, ConvertCommand, VerifyCommand, PlotdataCommand,
)}
