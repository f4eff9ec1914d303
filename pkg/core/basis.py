"""
基函数管理器 - 按族枚举指标、构造并缓存基函数
"""

import logging
import threading
from typing import Dict, List, Tuple, Union

from core.contragenic import MonogenicIndex, ambigenic, antimonogenic, contragenic, monogenic
from core.errors import IndexRangeError, UnsupportedFamilyError
from core.exact import format_rational
from core.harmonics import HarmonicIndex, SpheroidParam, garabedian_harmonic, spheroidal_solid_harmonic
from core.poly import TriPoly
from core.rquat import QPoly

FAMILIES = ("U", "V", "X", "Xbar", "A", "Z")
SCALAR_FAMILIES = ("U", "V")

Element = Union[TriPoly, QPoly]


class BasisManager:
    """基函数管理器"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self._cache: Dict[Tuple[str, int, int, str, object], Element] = {}
        self._lock = threading.Lock()

    def list_indices(self, family: str, max_degree: int) -> List[Tuple[int, int, str]]:
        """按 n、m 升序，'+' 在前列出族内全部非零元素的指标"""
        if family not in FAMILIES:
            raise UnsupportedFamilyError(f"未知的基函数族: {family!r}")
        indices = []
        for n in range(max_degree + 1):
            if family in ("U", "V"):
                top = n
            elif family == "Z":
                top = n - 1
            else:
                top = n + 1
            for m in range(top + 1):
                for parity in ("+", "-") if m > 0 else ("+",):
                    indices.append((n, m, parity))
        return indices

    def element(self, family: str, n: int, m: int, parity: str, sp) -> Element:
        param = SpheroidParam.of(sp)
        key = (family, n, m, parity, param.t)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = self._build(family, n, m, parity, param)
        with self._lock:
            self._cache[key] = value
        return value

    def _build(self, family: str, n: int, m: int, parity: str, param: SpheroidParam) -> Element:
        self.logger.debug(f"构造 {family}[{n},{m},{parity}] t={param.t}")
        if family == "U":
            return spheroidal_solid_harmonic(HarmonicIndex(n, m, parity), param)
        if family == "V":
            return garabedian_harmonic(HarmonicIndex(n, m, parity), param)
        if family == "Z":
            return contragenic(n, m, parity, param)
        if family in ("X", "Xbar", "A"):
            idx = MonogenicIndex(n, m, parity)
            if family == "X":
                return monogenic(idx, param)
            if family == "Xbar":
                return antimonogenic(idx, param)
            return ambigenic(idx, param)
        raise UnsupportedFamilyError(f"未知的基函数族: {family!r}")

    def elements(self, family: str, max_degree: int, sp) -> List[Tuple[str, Element]]:
        """带标签的基函数列表"""
        if max_degree < 0:
            raise IndexRangeError(f"最高次数不能为负: {max_degree}")
        result = []
        for n, m, parity in self.list_indices(family, max_degree):
            result.append((f"{family}[{n},{m},{parity}]", self.element(family, n, m, parity, sp)))
        self.logger.info(f"{family} 族 t={format_rational(SpheroidParam.of(sp).t)}: {len(result)} 个元素")
        return result
