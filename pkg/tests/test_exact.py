import pytest
from sympy import Rational

from core.errors import ParseError
from core.exact import (HalfInteger, double_factorial, factorial, format_rational,
                        pochhammer, to_rational)


@pytest.mark.parametrize("a, n, expected", [
    (7, 0, 1),
    ("1/2", 2, Rational(3, 4)),
    ("-5/2", 3, Rational(-15, 8)),
    (1, 5, 120),
])
def test_pochhammer(a, n, expected):
    assert pochhammer(a, n) == expected


def test_pochhammer_splits():
    a = Rational(-3, 2)
    for m in range(4):
        for n in range(4):
            assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_pochhammer_half_integer():
    assert pochhammer(HalfInteger(-5), 3) == Rational(-15, 8)


def test_factorial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(10) == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_double_factorial():
    assert double_factorial(-1) == 1
    assert double_factorial(0) == 1
    assert double_factorial(7) == 105


def test_to_rational_and_format():
    assert to_rational("6/8") == Rational(3, 4)
    assert to_rational(" -3 ") == -3
    assert format_rational(Rational(-1, 3)) == "-1/3"
    assert format_rational(Rational(4, 2)) == "2"
    assert format_rational(0) == "0"


@pytest.mark.parametrize("text", ["1/0", "abc", "1//2", "", "0.25"])
def test_to_rational_rejects(text):
    with pytest.raises(ParseError):
        to_rational(text)


@pytest.mark.parametrize("a", [Rational(-3, 2), Rational(1, 3), 5, -7, HalfInteger(-9)])
def test_pochhammer_splits_up_to_twenty(a):
    base = to_rational(a)
    for m in range(21):
        for n in range(21 - m):
            assert pochhammer(base, m + n) == pochhammer(base, m) * pochhammer(base + m, n)


def test_pochhammer_of_one_is_factorial():
    for n in range(21):
        assert pochhammer(1, n) == factorial(n)
