import pytest
from sympy import Rational

from core.basis import BasisManager
from core.errors import UnsupportedParameterError
from core.harmonics import HarmonicIndex, garabedian_harmonic, spheroidal_solid_harmonic
from core.integrals import (PiRational, garabedian_norm_closed_form, garabedian_norm_polynomial,
                            gram, inner_product, monomial_integral)
from core.poly import TriPoly
from core.rquat import QPoly


@pytest.mark.parametrize("exps, expected", [
    ((0, 0, 0), Rational(4, 3)),
    ((2, 0, 0), Rational(4, 15)),
    ((4, 0, 0), Rational(4, 35)),
    ((2, 2, 0), Rational(4, 105)),
    ((1, 0, 0), 0),
    ((2, 1, 2), 0),
])
def test_ball_monomials(exps, expected):
    assert monomial_integral(*exps, 0) == PiRational(expected)


def test_spheroid_monomials():
    assert monomial_integral(0, 0, 0, "1/4") == PiRational(1)
    assert monomial_integral(0, 2, 0, "1/4") == PiRational(Rational(4, 15) * Rational(9, 16))
    assert monomial_integral(2, 0, 0, -3) == PiRational(Rational(4, 15) * 4)


def test_inner_product_of_quaternions():
    x1 = TriPoly.variable(1)
    f = QPoly(TriPoly.zero(), x1, TriPoly.zero())
    g = QPoly(TriPoly.constant(5), x1, TriPoly.zero())
    assert inner_product(f, g, 0) == PiRational(Rational(4, 15))
    assert inner_product(TriPoly.constant(1), TriPoly.constant(1), "1/4") == PiRational(1)


@pytest.mark.parametrize("t", ["0", "1/4", "-1"])
def test_garabedian_gram_is_diagonal(t):
    matrix = gram(BasisManager().elements("V", 3, t), t)
    assert matrix.is_diagonal()
    assert matrix.off_diagonal_witness() is None
    assert matrix.rank() == matrix.size
    assert all(matrix.entries[i][i] > 0 for i in range(matrix.size))


def test_off_diagonal_witness_reported():
    x0 = TriPoly.variable(0)
    matrix = gram([("a", TriPoly.constant(1)), ("b", x0 * x0)], 0)
    label_a, label_b, value = matrix.off_diagonal_witness()
    assert (label_a, label_b, value) == ("a", "b", Rational(4, 15))
    assert not matrix.is_diagonal()


def test_ball_norms_of_garabedian_functions():
    v22 = garabedian_harmonic(HarmonicIndex(2, 2, "+"), 0)
    assert inner_product(v22, v22, 0) == PiRational(Rational(240, 7))
    v20 = garabedian_harmonic(HarmonicIndex(2, 0), 0)
    assert inner_product(v20, v20, 0) == PiRational(Rational(36, 35))


@pytest.mark.parametrize("t", ["1/4", "9/16"])
def test_closed_form_matches_direct_integration(t):
    for n in range(4):
        for m in range(n + 1):
            for parity in ("+", "-") if m else ("+",):
                v = garabedian_harmonic(HarmonicIndex(n, m, parity), t)
                direct = inner_product(v, v, t)
                assert garabedian_norm_closed_form(n, m, t, parity) == direct
                assert garabedian_norm_polynomial(n, m, t, parity) == direct


@pytest.mark.parametrize("t", ["0", "-1", "-3", "1/2"])
def test_polynomial_form_for_every_regime(t):
    for n in range(4):
        for m in range(n + 1):
            v = garabedian_harmonic(HarmonicIndex(n, m), t)
            assert garabedian_norm_polynomial(n, m, t) == inner_product(v, v, t)


def test_closed_form_requires_rational_root():
    with pytest.raises(UnsupportedParameterError):
        garabedian_norm_closed_form(1, 0, "1/2")
    with pytest.raises(UnsupportedParameterError):
        garabedian_norm_closed_form(1, 0, -1)
    assert garabedian_norm_polynomial(0, 0, -3) == PiRational(Rational(16, 3))


def test_spheroidal_harmonics_are_not_orthogonal_off_the_ball():
    manager = BasisManager()
    u20 = spheroidal_solid_harmonic(HarmonicIndex(2, 0), "1/4")
    assert inner_product(u20, TriPoly.constant(1), "1/4") == PiRational(Rational(-1, 30))
    matrix = gram(manager.elements("U", 2, "1/4"), "1/4")
    assert not matrix.is_diagonal()
    first, second, value = matrix.off_diagonal_witness()
    assert value != 0
    assert {first, second} == {"U[0,0,+]", "U[2,0,+]"}
    assert gram(manager.elements("U", 2, 0), 0).is_diagonal()
