"""
三元多项式 - 以 sympy 稀疏多项式环 QQ[x0, x1, x2] 为存储的精确多项式
"""

from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from core.exact import Number, format_rational, to_qq

RING, X0, X1, X2 = ring("x0,x1,x2", QQ, grlex)
_GENS = (X0, X1, X2)


class Monomial(NamedTuple):
    """单项式 x0^a x1^b x2^c"""
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c


class TriPoly:
    """不可变的有理系数三元多项式"""

    __slots__ = ('_p',)

    def __init__(self, element: PolyElement = None):
        self._p = RING.zero if element is None else element

    # 构造
    @classmethod
    def zero(cls) -> 'TriPoly':
        return cls(RING.zero)

    @classmethod
    def constant(cls, value: Number) -> 'TriPoly':
        return cls(RING.ground_new(to_qq(value)))

    @classmethod
    def variable(cls, axis: int) -> 'TriPoly':
        return cls(_GENS[axis])

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int, int], Number]) -> 'TriPoly':
        data = {}
        for exps, coeff in terms.items():
            c = to_qq(coeff)
            if c:
                key = tuple(int(e) for e in exps)
                data[key] = data.get(key, QQ.zero) + c
        return cls(RING.from_dict({k: v for k, v in data.items() if v}))

    @property
    def element(self) -> PolyElement:
        return self._p

    # 查询
    def is_zero(self) -> bool:
        return not self._p

    @property
    def degree(self) -> int:
        if not self._p:
            return -1
        return max(sum(e) for e in self._p.keys())

    def terms(self) -> List[Tuple[Monomial, Rational]]:
        """按分级字典序降序列出 (单项式, 系数)"""
        items = [(Monomial(*e), QQ.to_sympy(c)) for e, c in self._p.items()]
        items.sort(key=lambda item: (item[0].degree, tuple(item[0])), reverse=True)
        return items

    def coefficient(self, a: int, b: int, c: int) -> Rational:
        return QQ.to_sympy(self._p.get((a, b, c), QQ.zero))

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._p.keys()}) <= 1

    # 运算
    def __add__(self, other: 'TriPoly') -> 'TriPoly':
        return TriPoly(self._p + other._p)

    def __sub__(self, other: 'TriPoly') -> 'TriPoly':
        return TriPoly(self._p - other._p)

    def __neg__(self) -> 'TriPoly':
        return TriPoly(-self._p)

    def __mul__(self, other: 'TriPoly') -> 'TriPoly':
        if isinstance(other, TriPoly):
            return TriPoly(self._p * other._p)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'TriPoly':
        c = to_qq(factor)
        if not c:
            return TriPoly.zero()
        return TriPoly(self._p * c)

    def partial_derivative(self, axis: int) -> 'TriPoly':
        if axis not in (0, 1, 2):
            raise ValueError(f"坐标轴无效: {axis}")
        return TriPoly(self._p.diff(_GENS[axis]))

    def laplacian(self) -> 'TriPoly':
        total = RING.zero
        for gen in _GENS:
            total += self._p.diff(gen).diff(gen)
        return TriPoly(total)

    # 求值
    def evaluate(self, point: Sequence[Number]) -> Rational:
        """精确求值"""
        if len(point) != 3:
            raise ValueError("求值点必须是三维的")
        values = [to_qq(v) for v in point]
        return QQ.to_sympy(self._p(*values))

    def evaluate_float(self, x0, x1, x2):
        """在 numpy 数组（或浮点数）上求值"""
        x0, x1, x2 = (np.asarray(v, dtype=float) for v in (x0, x1, x2))
        result = np.zeros(np.broadcast(x0, x1, x2).shape)
        for (a, b, c), coeff in self._p.items():
            result = result + float(coeff) * x0 ** a * x1 ** b * x2 ** c
        return result

    # 序列化
    def to_json(self) -> List[Dict]:
        return [{"e": list(mono), "c": format_rational(coeff)} for mono, coeff in self.terms()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._p == other._p

    def __hash__(self) -> int:
        return hash(frozenset(self._p.items()))

    def __repr__(self) -> str:
        return f"TriPoly({self._p.as_expr()})"


def linear_combination(pairs: Iterable[Tuple[Number, TriPoly]]) -> TriPoly:
    total = RING.zero
    for coeff, poly in pairs:
        c = to_qq(coeff)
        if c:
            total += poly.element * c
    return TriPoly(total)


def radius_squared() -> TriPoly:
    return TriPoly(X0 ** 2 + X1 ** 2 + X2 ** 2)
