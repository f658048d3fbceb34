"""Degeneracy tests for polynomials with respect to G_a^g and G_m^g.

Only the two polynomial criteria are decided here:

* G_a: ``P`` is treated as degenerate exactly when some nonzero ``v``
  satisfies ``v . grad P == 0`` identically. The classical statement only gives
  "degenerate implies such a v exists"; the converse holds because a linear
  change of coordinates then makes ``P`` independent of one variable. This
  module uses the equivalence as its decision procedure.
* G_m: ``P`` is degenerate exactly when the exponent vectors of its support
  fail to span Q^g.

No criterion is known for elliptic G^g; :func:`degenerate` raises
:class:`Unsupported` for it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import as_rational
from .errors import ConstantPolynomial, DimensionMismatch, Unsupported, ZeroPolynomial
from .groups import Additive, Elliptic, Multiplicative
from .linalg import nullspace, rank
from .poly import MultiPoly


def gradient_matrix(P: MultiPoly) -> list[list[Fraction]]:
    """Coefficient matrix of the partials: one row per monomial, one column per variable."""
    grads = P.gradient()
    monos = sorted({e for d in grads for e in d.terms})
    return [[d.terms.get(e, Fraction(0)) for d in grads] for e in monos]


def ga_degeneracy(P: MultiPoly) -> list[Fraction] | None:
    """A nonzero ``v`` with ``v . grad P == 0``, or None if P is G_a-non-degenerate."""
    if P.is_constant():
        raise ConstantPolynomial(f"{P} is constant")
    basis = nullspace(gradient_matrix(P), P.num_vars)
    return basis[0] if basis else None


def gm_degeneracy(P: MultiPoly) -> bool:
    """True when the support's exponent vectors span a proper subspace of Q^g."""
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has empty support")
    return rank(P.support(), P.num_vars) < P.num_vars


def hypersurface_degree(P: MultiPoly) -> int:
    """Sum over variables of the largest exponent of that variable in the support."""
    return sum(P.degree_profile())


def translation_invariance_certificate(P: MultiPoly, v: Sequence) -> bool:
    """Exactly check ``P(x + t v) == P(x)`` as polynomials in ``x`` and ``t``."""
    v = [as_rational(c) for c in v]
    g = P.num_vars
    if len(v) != g:
        raise DimensionMismatch(f"vector of length {len(v)} for {g} variables")
    if not any(v):
        raise ValueError("v must be nonzero")
    n = g + 1
    t = MultiPoly.variable(n, g)
    shifted = P.compose([MultiPoly.variable(n, i) + t * c for i, c in enumerate(v)])
    return (shifted - P.embed(n)).is_zero()


def degenerate(P: MultiPoly, group) -> bool:
    """Dispatch on the ambient group."""
    if isinstance(group, Additive):
        return ga_degeneracy(P) is not None
    if isinstance(group, Multiplicative):
        return gm_degeneracy(P)
    if isinstance(group, Elliptic):
        raise Unsupported("no effective degeneracy criterion over elliptic curves")
    raise TypeError(f"unknown group {group!r}")
