from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from sumprod.arith import (
    as_rational,
    divisors,
    factorize,
    rational_roots,
    rational_sqrt,
    rational_str,
)
from sumprod.errors import FactorizationBudgetExceeded


def test_as_rational_rejects_floats():
    assert as_rational("-3/4") == Fraction(-3, 4)
    assert as_rational(5) == Fraction(5)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_rational_str_is_p_over_q():
    assert rational_str(Fraction(5)) == "5/1"
    assert rational_str(Fraction(-6, 4)) == "-3/2"


@pytest.mark.parametrize(
    "q, root",
    [(Fraction(4), 2), (Fraction(9, 25), Fraction(3, 5)), (Fraction(2), None), (Fraction(-4), None),
     (Fraction(0), 0), (Fraction(4, 3), None)],
)
def test_rational_sqrt(q, root):
    assert rational_sqrt(q) == root


@given(st.fractions(min_value=0, max_denominator=10**6))
def test_rational_sqrt_of_square(q):
    assert rational_sqrt(q * q) == q


@pytest.mark.parametrize(
    "n", [1, 2, 97, 2**61 - 1, 10**6 + 3, (10**6 + 3) * (10**6 + 33), 2**10 * 3**5 * 1000003,
          (10**12 + 39) * (10**12 + 61), -360]
)
def test_factorize_matches_sympy(n):
    assert dict(factorize(n)) == sympy.factorint(abs(n))


def test_factorize_budget_is_loud():
    n = (10**15 + 37) * (10**15 + 91)
    with pytest.raises(FactorizationBudgetExceeded):
        factorize(n, rho_budget=10)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(-7) == [1, 7]


@pytest.mark.parametrize(
    "coeffs",
    [[-2, 0, 1], [-1, 0, 1], [0, 0, 6, -5, 1], ["1/2", "-3/2", "1"], [6, 1, -4, 1],
     [12, -8, -3, 2], [0, 1], [5], ["-1/9", 0, 1]],
)
def test_rational_roots_match_sympy(coeffs):
    x = sympy.Symbol("x")
    poly = sum(sympy.Rational(str(c)) * x**i for i, c in enumerate(coeffs))
    expected = sorted(r for r in sympy.roots(sympy.Poly(poly, x)) if r.is_rational)
    got = rational_roots(coeffs)
    assert [sympy.Rational(r.numerator, r.denominator) for r in got] == expected


def test_rational_roots_zero_polynomial():
    with pytest.raises(ValueError):
        rational_roots([0, 0])


@given(
    st.lists(
        st.fractions(min_value=-50, max_value=50, max_denominator=12).filter(bool),
        min_size=1,
        max_size=4,
        unique=True,
    )
)
def test_rational_roots_recovers_planted_roots(roots):
    coeffs = [Fraction(1)]
    for r in roots:  # multiply by (x - r)
        coeffs = [-r * coeffs[0]] + [coeffs[i - 1] - r * coeffs[i] for i in range(1, len(coeffs))] + [coeffs[-1]]
    assert rational_roots(coeffs) == sorted(roots)
