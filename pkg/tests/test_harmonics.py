import numpy as np
import pytest
from sympy import Rational

from core.errors import IndexRangeError, UnsupportedParameterError, UnsupportedRegimeError
from core.harmonics import (HarmonicIndex, SpheroidParam, assoc_legendre, eval_via_coords,
                            garabedian_harmonic, spherical_solid_harmonic,
                            spheroidal_solid_harmonic)
from core.poly import TriPoly

x0 = TriPoly.variable(0)
x1 = TriPoly.variable(1)
x2 = TriPoly.variable(2)
rho2 = x1 * x1 + x2 * x2


def test_spheroid_param_regimes():
    assert SpheroidParam.of("1/4").regime == "prolate"
    assert SpheroidParam.of(0).regime == "ball"
    assert SpheroidParam.of(-3).regime == "oblate"
    with pytest.raises(UnsupportedParameterError):
        SpheroidParam.of(1)


def test_index_validation():
    with pytest.raises(IndexRangeError):
        HarmonicIndex(2, 0, "-")
    with pytest.raises(IndexRangeError):
        spherical_solid_harmonic(HarmonicIndex(1, 2, "+"))
    with pytest.raises(IndexRangeError):
        garabedian_harmonic(HarmonicIndex(1, 3, "+"), 0)


def test_assoc_legendre_values():
    assert assoc_legendre(2, 0, 1) == 1
    assert assoc_legendre(1, 1, Rational(3, 5)) == Rational(-4, 5)
    assert assoc_legendre(1, 1, Rational(5, 3), "cut") == Rational(4, 3)
    assert assoc_legendre(2, 2, Rational(1, 2)) == Rational(9, 4)


def test_assoc_legendre_rejects_order_above_degree():
    with pytest.raises(IndexRangeError):
        assoc_legendre(1, 2, Rational(1, 2))
    with pytest.raises(IndexRangeError):
        assoc_legendre(3, 4, Rational(3, 2), "cut")


def test_low_degree_ball_harmonics():
    assert spherical_solid_harmonic(HarmonicIndex(1, 1, "+")) == -x1
    assert spherical_solid_harmonic(HarmonicIndex(1, 1, "-")) == -x2
    assert spherical_solid_harmonic(HarmonicIndex(2, 0)) == x0 * x0 - rho2.scale(Rational(1, 2))
    assert spherical_solid_harmonic(HarmonicIndex(2, 1, "+")) == (x0 * x1).scale(-3)
    assert spherical_solid_harmonic(HarmonicIndex(2, 2, "+")) == (x1 * x1 - x2 * x2).scale(3)
    assert spherical_solid_harmonic(HarmonicIndex(2, 2, "-")) == (x1 * x2).scale(6)
    expected = (x0 * x0 * x1).scale(-6) + (x1 * rho2).scale(Rational(3, 2))
    assert spherical_solid_harmonic(HarmonicIndex(3, 1, "+")) == expected


def test_spheroidal_shift():
    u = spheroidal_solid_harmonic(HarmonicIndex(2, 0), "1/4")
    assert u == spherical_solid_harmonic(HarmonicIndex(2, 0)) - TriPoly.constant(Rational(1, 12))
    u3 = spheroidal_solid_harmonic(HarmonicIndex(3, 0), -1)
    assert u3 == spherical_solid_harmonic(HarmonicIndex(3, 0)) + x0.scale(Rational(3, 5))


@pytest.mark.parametrize("t", ["0", "1/4", "9/16", "-1", "-3"])
def test_harmonic_and_degree(t):
    for n in range(5):
        for m in range(n + 1):
            for parity in ("+", "-") if m else ("+",):
                u = spheroidal_solid_harmonic(HarmonicIndex(n, m, parity), t)
                assert u.laplacian().is_zero()
                assert u.degree == n
                v = garabedian_harmonic(HarmonicIndex(n, m, parity), t)
                assert v.laplacian().is_zero()


def test_garabedian_top_order_vanishes():
    assert garabedian_harmonic(HarmonicIndex(2, 3, "+"), "1/4").is_zero()
    assert garabedian_harmonic(HarmonicIndex(2, 0), "1/4") == (
        spheroidal_solid_harmonic(HarmonicIndex(2, 0), "1/4").scale(3) + TriPoly.constant(Rational(1, 10)))


def test_appell_property_on_ball():
    for n in range(1, 6):
        for m in range(n):
            u = spherical_solid_harmonic(HarmonicIndex(n, m))
            assert u.partial_derivative(0) == spherical_solid_harmonic(HarmonicIndex(n - 1, m)).scale(n + m)


def test_coordinate_path_matches_polynomial():
    rng = np.random.default_rng(7)
    u = rng.uniform(0.0, np.pi, 20)
    v = rng.uniform(0.1, 1.2, 20)
    phi = rng.uniform(0.0, 2 * np.pi, 20)
    mu = 0.5
    x0v = mu * np.cos(u) * np.cosh(v)
    x1v = mu * np.sin(u) * np.sinh(v) * np.cos(phi)
    x2v = mu * np.sin(u) * np.sinh(v) * np.sin(phi)
    for n in range(4):
        for m in range(n + 1):
            for parity in ("+", "-") if m else ("+",):
                idx = HarmonicIndex(n, m, parity)
                via_coords = eval_via_coords(idx, "1/4", (u, v, phi))
                direct = spheroidal_solid_harmonic(idx, "1/4").evaluate_float(x0v, x1v, x2v)
                assert np.allclose(via_coords, direct, rtol=1e-10, atol=1e-12)


def test_coordinate_path_rejects_non_prolate():
    with pytest.raises(UnsupportedRegimeError):
        eval_via_coords(HarmonicIndex(1, 0), -1, (0.1, 0.2, 0.3))
    with pytest.raises(UnsupportedRegimeError):
        eval_via_coords(HarmonicIndex(1, 0), 0, (0.1, 0.2, 0.3))


@pytest.mark.parametrize("t", ["1/4", "-3"])
def test_garabedian_harmonic_up_to_degree_eight(t):
    for n in range(9):
        for m in range(n + 1):
            for parity in ("+", "-") if m else ("+",):
                v = garabedian_harmonic(HarmonicIndex(n, m, parity), t)
                assert v.laplacian().is_zero()
                assert v.degree == n


@pytest.mark.parametrize("t", ["0", "9/16", "-1"])
def test_angular_order_parity(t):
    for n in range(7):
        for m in range(n + 1):
            for parity in ("+", "-") if m else ("+",):
                u = spheroidal_solid_harmonic(HarmonicIndex(n, m, parity), t)
                for mono, _ in u.terms():
                    assert (mono.b + mono.c) % 2 == m % 2
                    assert mono.c % 2 == (0 if parity == "+" else 1)
                    assert mono.a % 2 == (n - m) % 2


def test_ball_harmonics_are_homogeneous():
    for n in range(6):
        for m in range(n + 1):
            assert spherical_solid_harmonic(HarmonicIndex(n, m)).is_homogeneous()
