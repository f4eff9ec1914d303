import pytest
from sympy import Rational

from core.convert import (CoeffQuery, ConversionTerm, Family, coef_U0_to_Umu, coef_U0_to_Vmu,
                          coef_U_to_U, coef_Umu_from_Vmu, coef_Umu_from_Vmu_by_inversion,
                          coef_V0_from_Vmu, coef_V_to_V,
                          coef_Vhat_to_U0, coef_Vmu_from_Umu, coef_W, coef_W_sum, coefficient,
                          conversion_matrix, convert_basis, hypergeom_terminating)
from core.errors import IndexRangeError, UnsupportedFamilyError

T_VALUES = [Rational(1, 4), Rational(9, 16), Rational(-1), Rational(-3)]


def test_forward_coefficients():
    assert coef_U_to_U(2, 0, 0) == 1
    assert coef_U_to_U(2, 0, 1) == Rational(-1, 3)
    assert coef_U_to_U(3, 0, 1) == Rational(-3, 5)
    assert coef_U_to_U(3, 1, 1) == Rational(-6, 5)
    assert coef_V_to_V(1, 0, 1) == Rational(-1, 3)
    assert coef_Vhat_to_U0(1, 0, 0) == 2


def test_out_of_range_is_zero():
    assert coef_U_to_U(2, 0, 2) == 0
    assert coef_U_to_U(2, 3, 0) == 0
    assert coef_U_to_U(2, 0, -1) == 0
    assert coef_V_to_V(2, 0, 2) == 0
    assert coef_U0_to_Umu(3, 2, 1) == 0
    assert coef_W(2, 0, 2, "1/4", "-1") == 0


def test_backward_coefficients():
    assert coef_U0_to_Umu(2, 0, 1) == Rational(1, 3)
    assert coef_U0_to_Umu(3, 0, 1) == Rational(3, 5)
    for n in range(6):
        for m in range(n + 1):
            assert coef_U0_to_Umu(n, m, 0) == 1
    assert coef_U0_to_Vmu(1, 0, 0) == Rational(1, 2)
    assert coef_U0_to_Vmu(1, 0, 1) == 0


def test_round_trip_is_identity():
    for n in range(9):
        for m in range(n + 1):
            for k in range((n - m) // 2 + 1):
                total = sum((coef_U_to_U(n, m, l) * coef_U0_to_Umu(n - 2 * l, m, k - l)
                             for l in range(k + 1)), Rational(0))
                assert total == (1 if k == 0 else 0)


def test_v_from_u_and_inverse():
    assert coef_Vmu_from_Umu(2, 0, 0) == 3
    assert coef_Vmu_from_Umu(2, 0, 1) == Rational(2, 5)
    assert coef_Umu_from_Vmu(2, 0, 0) == Rational(1, 3)
    assert coef_Umu_from_Vmu(2, 0, 1) == Rational(-2, 15)
    assert coef_Umu_from_Vmu(3, 0, 1) == Rational(-3, 35)
    assert coef_Umu_from_Vmu(3, 3, 0) == Rational(1, 7)


def test_two_term_inverse_matches_triangular_inversion():
    for n in range(9):
        for m in range(n + 1):
            for k in range((n - m) // 2 + 1):
                expected = {0: Rational(1, n + m + 1), 1: Rational(-(n + m), 4 * n * n - 1)}.get(k, 0)
                assert coef_Umu_from_Vmu(n, m, k) == expected
                assert coef_Umu_from_Vmu_by_inversion(n, m, k) == expected


def test_hypergeometric():
    assert hypergeom_terminating(0, 4, "7/3") == 1
    assert hypergeom_terminating(1, 2, 1) == 0
    assert hypergeom_terminating(1, 2, 0) == 1


def test_w_limits_and_identity():
    for n in range(7):
        for m in range(n + 1):
            for k in range((n - m) // 2 + 1):
                for t in T_VALUES:
                    assert coef_W(n, m, k, t, 0) == coef_V_to_V(n, m, k) * t ** k
                    assert coef_W(n, m, k, 0, t) == coef_V0_from_Vmu(n, m, k) * t ** k
                    assert coef_W(n, m, k, t, t) == (1 if k == 0 else 0)


def test_w_closed_form_matches_double_sum():
    for n in range(7):
        for m in range(n + 1):
            for k in range((n - m) // 2 + 1):
                for t_target in T_VALUES:
                    for t_source in T_VALUES:
                        assert coef_W(n, m, k, t_target, t_source) == coef_W_sum(n, m, k, t_target, t_source)


def test_w_top_index_agrees_with_double_sum():
    assert coef_W(2, 1, 1, Rational(1, 4), Rational(-1)) == Rational(6, 5) * (Rational(-1) - Rational(1, 4))
    for n in range(7):
        for m in range(n + 1):
            top = min(n - m + 1, n) // 2
            for t_target in T_VALUES:
                for t_source in T_VALUES:
                    assert coef_W(n, m, top, t_target, t_source) == coef_W_sum(n, m, top, t_target, t_source)
            assert coef_W(n, m, top + 1, "1/4", "-1") == 0
            assert coef_W_sum(n, m, top + 1, "1/4", "-1") == 0


def test_ladder_across_orders():
    t_target, t_source = Rational(9, 16), Rational(-3)
    for n in range(7):
        for m in range(1, n + 1):
            for k in range((n - m) // 2 + 1):
                middle = coef_W(n, m, k, t_target, t_source)
                lower = coef_W(n, m - 1, k, t_target, t_source)
                assert Rational(n + m + 1, n + m - 2 * k + 1) * lower == middle


def test_coefficient_dispatch():
    assert coefficient(CoeffQuery(2, 0, 1, Family.U_TO_U)) == Rational(-1, 3)
    assert coefficient(CoeffQuery(2, 0, 1, Family("Vmu_from_Umu"))) == Rational(2, 5)
    assert coefficient(CoeffQuery(2, 0, 0, Family.W_MUT_MU), "1/4", "-1") == 1


def test_convert_basis_example():
    terms = convert_basis("U", 2, 0, "+", 0, "1/4")
    assert terms == [ConversionTerm(2, 0, "+", Rational(1)), ConversionTerm(0, 0, "+", Rational(-1, 12))]


def test_convert_basis_errors():
    with pytest.raises(UnsupportedFamilyError):
        convert_basis("Z", 2, 0, "+", 0, "1/4")
    with pytest.raises(IndexRangeError):
        convert_basis("U", 2, 3, "+", 0, "1/4")
    with pytest.raises(IndexRangeError):
        convert_basis("V", 2, 0, "-", 0, "1/4")


def test_matrix_is_unit_lower_triangular_and_composes():
    t_target, t_source = Rational(1, 4), Rational(-1)
    for m in range(3):
        forward = conversion_matrix("V", m, 0, t_target, 6)
        backward = conversion_matrix("V", m, t_source, 0, 6)
        direct = conversion_matrix("V", m, t_source, t_target, 6)
        assert forward.is_unit_lower_triangular()
        assert direct.is_unit_lower_triangular()
        product = forward @ backward
        assert product.entries == direct.entries
