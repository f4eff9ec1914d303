from sympy import Rational

from core.poly import TriPoly
from core.rquat import QPoly, conjugate, dirac, qmul

one, e1, e2, e3 = (QPoly.unit(i) for i in range(4))
x0 = TriPoly.variable(0)
x1 = TriPoly.variable(1)
x2 = TriPoly.variable(2)


def test_unit_products():
    assert qmul(e1, e2) == e3
    assert qmul(e2, e3) == e1
    assert qmul(e3, e1) == e2
    for unit in (e1, e2, e3):
        assert qmul(unit, unit) == one.scale(-1)


def test_times_e3_matches_product():
    f = QPoly(x0, x1 * x2, TriPoly.constant(Rational(2, 3)), x2)
    assert f.times_e3() == qmul(f, e3)


def test_conjugate_reverses_products():
    f = QPoly(x0, x1, x2 * x0, TriPoly.zero())
    g = QPoly(TriPoly.constant(3), x2, TriPoly.zero(), x1)
    assert conjugate(qmul(f, g)) == qmul(conjugate(g), conjugate(f))


def test_associativity():
    f = QPoly(x0, x1, TriPoly.zero(), x2)
    g = QPoly(x1, TriPoly.constant(2), x0, TriPoly.zero())
    h = QPoly(TriPoly.zero(), x2, x1, TriPoly.constant(-1))
    assert qmul(qmul(f, g), h) == qmul(f, qmul(g, h))


def test_dirac_factorises_laplacian():
    p = x0 * x0 * x1 + x2 * x2 * x2 - x0 * x1 * x2
    lap = dirac(dirac(QPoly.scalar(p), conjugated=True), conjugated=False)
    assert lap == QPoly.scalar(p.laplacian())


def test_reduced_and_vec():
    f = QPoly(x0, x1, x2)
    assert f.is_reduced()
    assert f.vec().sc().is_zero()
    assert (f - f.vec()) == QPoly.scalar(x0)
