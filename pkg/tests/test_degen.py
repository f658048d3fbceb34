import random
from fractions import Fraction

import pytest

from oracles import random_sparse_poly, sympy_ga_nullity, sympy_gm_rank, sympy_translation_invariant
from sumprod import (
    ga_degeneracy,
    gm_degeneracy,
    hypersurface_degree,
    parse,
    translation_invariance_certificate,
)
from sumprod.degen import degenerate
from sumprod.errors import ConstantPolynomial, DimensionMismatch, Unsupported, ZeroPolynomial
from sumprod.groups import GA, GM, Elliptic
from sumprod.poly import MultiPoly


def test_ga_examples():
    assert ga_degeneracy(parse("x*y + y*z + z*x")) is None
    assert ga_degeneracy(parse("x + y")) == [1, -1]
    assert ga_degeneracy(parse("x2*x3 - x1 + 1")) is None
    v = ga_degeneracy(parse("x^2 - 2*x*y + y^2 + z", 3))
    assert v == [1, 1, 0]
    with pytest.raises(ConstantPolynomial):
        ga_degeneracy(MultiPoly.constant(2, 3))


def test_gm_examples():
    assert gm_degeneracy(parse("x2*x3 - x1 + 1"))
    assert not gm_degeneracy(parse("x*y + y*z + z*x"))
    assert gm_degeneracy(parse("x1*x2"))
    assert not gm_degeneracy(parse("x1*x2 + x1"))
    with pytest.raises(ZeroPolynomial):
        gm_degeneracy(MultiPoly(2, {}))


def test_hypersurface_degree_examples():
    assert hypersurface_degree(parse("x2*x3 - x1 + 1")) == 3
    assert hypersurface_degree(parse("x^3*y + y^2")) == 5
    assert hypersurface_degree(MultiPoly.constant(3, 4)) == 0


def test_certificate_examples():
    assert translation_invariance_certificate(parse("x + y"), [1, -1])
    assert not translation_invariance_certificate(parse("x*y + y*z + z*x"), [1, 0, 0])
    with pytest.raises(DimensionMismatch):
        translation_invariance_certificate(parse("x + y"), [1, -1, 0])
    with pytest.raises(ValueError):
        translation_invariance_certificate(parse("x + y"), [0, 0])


def test_dispatch():
    P = parse("x + y")
    assert degenerate(P, GA)
    assert degenerate(P, GM) is False
    with pytest.raises(Unsupported):
        degenerate(P, Elliptic(0, 1))


@pytest.mark.parametrize("seed", range(20))
def test_against_sympy(seed):
    rng = random.Random(seed)
    P = random_sparse_poly(rng, rng.randint(1, 4))
    v = ga_degeneracy(P)
    nullity = sympy_ga_nullity(P)
    assert (v is None) == (nullity == 0)
    if v is not None:
        assert translation_invariance_certificate(P, v)
        assert sympy_translation_invariant(P, v)
    assert gm_degeneracy(P) == (sympy_gm_rank(P) < P.num_vars)


@pytest.mark.parametrize("seed", range(15))
def test_planted_degeneracy_is_found(seed):
    # Q(x - c*y, z) pulled back along a direction is invariant under (c, 1, 0)
    rng = random.Random(1000 + seed)
    inner = random_sparse_poly(rng, 2)
    c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    x, y, z = (MultiPoly.variable(3, i) for i in range(3))
    P = inner.compose([x - y * c, z])
    if P.is_constant():
        return
    v = ga_degeneracy(P)
    assert v is not None
    assert translation_invariance_certificate(P, v)
    assert translation_invariance_certificate(P, [c, 1, 0])
