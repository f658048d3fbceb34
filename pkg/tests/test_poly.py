import random
from fractions import Fraction

import pytest
import sympy

from sumprod.errors import DimensionMismatch
from sumprod.poly import MultiPoly, parse

SYMS = sympy.symbols("x1:5")


def to_sympy(P):
    return sympy.expand(
        sum(
            sympy.Rational(c.numerator, c.denominator)
            * sympy.Mul(*[s**k for s, k in zip(SYMS, e)])
            for e, c in P.terms.items()
        )
    )


def random_poly(rng, g, terms=4, deg=3):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in range(g))
        out[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return MultiPoly(g, out)


def test_parse_examples():
    P = parse("x*y + y*z + z*x")
    assert P.num_vars == 3
    assert P.terms == {(1, 1, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}
    Q = parse("X2*X3 - X1 + 1")
    assert Q == parse("x2*x3 - x1 + 1")
    assert parse("-3/4*x1^2*x2 + 2").terms == {(2, 1): Fraction(-3, 4), (0, 0): 2}
    assert parse("x**3 - x^3") .is_zero()
    assert parse("x^2+1", num_vars=2).num_vars == 2


@pytest.mark.parametrize("bad", ["x^", "x + * y", "x^1/2", "q1", "x0", "2 3"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse(bad)


def test_parse_dimension_check():
    with pytest.raises(DimensionMismatch):
        parse("x3", num_vars=2)


def test_str_round_trip():
    rng = random.Random(1)
    for _ in range(30):
        P = random_poly(rng, 3)
        assert parse(str(P), P.num_vars) == P


@pytest.mark.parametrize("seed", range(20))
def test_arithmetic_matches_sympy(seed):
    rng = random.Random(seed)
    P, Q = random_poly(rng, 3), random_poly(rng, 3)
    assert to_sympy(P + Q) == sympy.expand(to_sympy(P) + to_sympy(Q))
    assert to_sympy(P * Q) == sympy.expand(to_sympy(P) * to_sympy(Q))
    assert to_sympy(P - Q) == sympy.expand(to_sympy(P) - to_sympy(Q))
    assert to_sympy(P**2) == sympy.expand(to_sympy(P) ** 2)
    for i in range(3):
        assert to_sympy(P.partial(i)) == sympy.diff(to_sympy(P), SYMS[i])


@pytest.mark.parametrize("seed", range(20))
def test_product_rule(seed):
    rng = random.Random(100 + seed)
    P, Q = random_poly(rng, 3), random_poly(rng, 3)
    for i in range(3):
        assert (P * Q).partial(i) == P * Q.partial(i) + Q * P.partial(i)


def test_evaluate_compose_specialize():
    P = parse("x2*x3 - x1 + 1")
    assert P(3, 1, 2) == 0
    assert P.evaluate([Fraction(1, 2), 2, 3]) == Fraction(13, 2)
    images = [parse("x1 + x2", 2), parse("x1", 2), parse("x2", 2)]
    assert P.compose(images) == parse("x1*x2 - x1 - x2 + 1")
    assert P.specialize(0, 5) == parse("x1*x2 - 4")
    assert P.embed(4).num_vars == 4
    with pytest.raises(DimensionMismatch):
        P.evaluate([1, 2])


def test_degree_queries():
    P = parse("x^3*y + y^2")
    assert P.degree_profile() == (3, 2)
    assert P.total_degree() == 4
    assert MultiPoly.constant(2, 5).is_constant()
    assert MultiPoly.from_univariate([1, 0, 2]) == parse("2*x^2 + 1")
