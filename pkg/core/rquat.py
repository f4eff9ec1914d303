"""
四元数值多项式 - 哈密顿乘积、共轭与 Dirac 算子
"""

from typing import Dict, Iterable, Tuple

from core.exact import Number
from core.poly import TriPoly

COMPONENT_NAMES = ("s", "e1", "e2", "e3")


class QPoly:
    """f = s + v1 e1 + v2 e2 + v3 e3，各分量为 TriPoly"""

    __slots__ = ('s', 'v1', 'v2', 'v3')

    def __init__(self, s: TriPoly = None, v1: TriPoly = None,
                 v2: TriPoly = None, v3: TriPoly = None):
        self.s = s if s is not None else TriPoly.zero()
        self.v1 = v1 if v1 is not None else TriPoly.zero()
        self.v2 = v2 if v2 is not None else TriPoly.zero()
        self.v3 = v3 if v3 is not None else TriPoly.zero()

    @classmethod
    def zero(cls) -> 'QPoly':
        return cls()

    @classmethod
    def scalar(cls, p: TriPoly) -> 'QPoly':
        return cls(s=p)

    @classmethod
    def unit(cls, index: int) -> 'QPoly':
        """常数单位 1, e1, e2, e3"""
        parts = [TriPoly.zero()] * 4
        parts[index] = TriPoly.constant(1)
        return cls(*parts)

    def components(self) -> Tuple[TriPoly, TriPoly, TriPoly, TriPoly]:
        return (self.s, self.v1, self.v2, self.v3)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components())

    def is_reduced(self) -> bool:
        return self.v3.is_zero()

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.components())

    def sc(self) -> TriPoly:
        return self.s

    def vec(self) -> 'QPoly':
        return QPoly(TriPoly.zero(), self.v1, self.v2, self.v3)

    def __add__(self, other: 'QPoly') -> 'QPoly':
        return QPoly(*(a + b for a, b in zip(self.components(), other.components())))

    def __sub__(self, other: 'QPoly') -> 'QPoly':
        return QPoly(*(a - b for a, b in zip(self.components(), other.components())))

    def __neg__(self) -> 'QPoly':
        return QPoly(*(-a for a in self.components()))

    def scale(self, factor: Number) -> 'QPoly':
        return QPoly(*(a.scale(factor) for a in self.components()))

    def __mul__(self, other: 'QPoly') -> 'QPoly':
        return qmul(self, other)

    def conjugate(self) -> 'QPoly':
        return QPoly(self.s, -self.v1, -self.v2, -self.v3)

    def times_e3(self) -> 'QPoly':
        """右乘 e3"""
        # (s + a e1 + b e2 + c e3) e3 = -c + b e1 - a e2 + s e3
        return QPoly(-self.v3, self.v2, -self.v1, self.s)

    def to_json(self) -> Dict[str, list]:
        return {name: p.to_json() for name, p in zip(COMPONENT_NAMES, self.components())}

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self) -> int:
        return hash(self.components())

    def __repr__(self) -> str:
        return f"QPoly(s={self.s!r}, e1={self.v1!r}, e2={self.v2!r}, e3={self.v3!r})"


def qmul(f: QPoly, g: QPoly) -> QPoly:
    """哈密顿乘积，e1e2=e3, e2e3=e1, e3e1=e2"""
    a0, a1, a2, a3 = f.components()
    b0, b1, b2, b3 = g.components()
    return QPoly(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conjugate(f: QPoly) -> QPoly:
    return f.conjugate()


def dirac(f: QPoly, conjugated: bool) -> QPoly:
    """左作用的 Dirac 算子：∂0 + e1∂1 + e2∂2，conjugated 时取 ∂0 - e1∂1 - e2∂2"""
    sign = -1 if conjugated else 1
    result = QPoly(*(p.partial_derivative(0) for p in f.components()))
    for axis in (1, 2):
        derivative = QPoly(*(p.partial_derivative(axis) for p in f.components()))
        unit = QPoly.unit(axis).scale(sign)
        result = result + qmul(unit, derivative)
    return result


def qsum(items: Iterable[Tuple[Number, QPoly]]) -> QPoly:
    total = QPoly.zero()
    for coeff, q in items:
        total = total + q.scale(coeff)
    return total
