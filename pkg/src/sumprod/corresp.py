"""Algebraic correspondences between 1-dimensional groups, evaluated over Q.

A correspondence relates points of a source group to finitely many points of
a target group. Only rational fiber points are returned: a fiber whose points
are all irrational comes back empty (or raises :class:`IrrationalFiber` when
``strict=True``). This is the module's contract, not an approximation.

Four kinds are supported:

``Graph(phi)``
    ``{(x, phi(x))}`` for a univariate polynomial ``phi``.
``CoordProj(axis)``
    ``(x, y) -> x`` or ``y`` on a Weierstrass curve, target G_a.
``SquareShift(u)``
    fiber of ``x`` is ``{z : (u + z)^2 = x}``.
``Implicit(P)``
    ``{(x, y) : P(x, y) = 0}`` for a bivariate polynomial ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import DEFAULT_RHO_BUDGET, as_rational, rational_roots, rational_sqrt, rational_str
from .errors import IrrationalFiber, MixedGroups, NotOnGroup, Unsupported
from .finsets import FiniteSet
from .groups import (
    Additive,
    EcAffine,
    Elliptic,
    GroupDescriptor,
    GroupElement,
    Multiplicative,
    group_from_json,
    group_to_json,
    value,
)
from .poly import MultiPoly, as_poly

# every group here is P^1 or an elliptic curve, both of degree 1 for the line
# bundles O(1) and O_E(O)
CLOSURE_DEGREE = 1


def _is_line_group(g) -> bool:
    return isinstance(g, (Additive, Multiplicative))


@dataclass(frozen=True)
class Correspondence:
    source: GroupDescriptor
    target: GroupDescriptor

    @property
    def d_source(self) -> int:
        """Generic number of target points above a source point."""
        raise NotImplementedError

    @property
    def d_target(self) -> int:
        """Generic number of source points above a target point."""
        raise NotImplementedError

    def _fiber_values(self, p: GroupElement, rho_budget: int) -> list:
        raise NotImplementedError

    def fiber(self, p: GroupElement, *, rho_budget: int = DEFAULT_RHO_BUDGET) -> FiniteSet:
        if not self.source.contains(p):
            raise NotOnGroup(f"{p!r} is not on {self.source}")
        tgt = self.target
        pts = (tgt.element(v) for v in self._fiber_values(p, rho_budget))
        return FiniteSet(tgt, (q for q in pts if tgt.contains(q)), check=False)


def _check_line_groups(C) -> None:
    if not (_is_line_group(C.source) and _is_line_group(C.target)):
        raise ValueError(f"{type(C).__name__} needs G_a or G_m on both sides")


@dataclass(frozen=True)
class Graph(Correspondence):
    phi: MultiPoly = field(default=None)

    def __post_init__(self):
        _check_line_groups(self)
        phi = as_poly(self.phi, 1)
        if phi.num_vars != 1:
            raise ValueError("phi must be univariate")
        if phi.is_constant():
            raise ValueError("phi must be nonconstant (dominance)")
        object.__setattr__(self, "phi", phi)

    @property
    def d_source(self):
        return 1

    @property
    def d_target(self):
        return self.phi.total_degree()

    def _fiber_values(self, p, rho_budget):
        return [self.phi.evaluate((value(p),))]


@dataclass(frozen=True)
class CoordProj(Correspondence):
    axis: str = "x"

    def __post_init__(self):
        if not isinstance(self.source, Elliptic) or not isinstance(self.target, Additive):
            raise ValueError("CoordProj maps an elliptic curve to G_a")
        axis = self.axis.lower()
        if axis not in ("x", "y"):
            raise ValueError("axis must be 'x' or 'y'")
        object.__setattr__(self, "axis", axis)

    @property
    def d_source(self):
        return 1

    @property
    def d_target(self):
        return 2 if self.axis == "x" else 3

    def _fiber_values(self, p, rho_budget):
        if not isinstance(p, EcAffine):
            return []  # the point at infinity has no affine coordinate
        return [p.x if self.axis == "x" else p.y]


@dataclass(frozen=True)
class SquareShift(Correspondence):
    u: Fraction = Fraction(0)

    def __post_init__(self):
        _check_line_groups(self)
        object.__setattr__(self, "u", as_rational(self.u))

    @property
    def d_source(self):
        return 2

    @property
    def d_target(self):
        return 1

    def _fiber_values(self, p, rho_budget):
        r = rational_sqrt(value(p))
        if r is None:
            return []
        return sorted({r - self.u, -r - self.u})


@dataclass(frozen=True)
class Implicit(Correspondence):
    """Curve ``P(x, y) = 0`` with ``x`` on the source and ``y`` on the target."""

    P: MultiPoly = field(default=None)

    def __post_init__(self):
        _check_line_groups(self)
        P = as_poly(self.P, 2)
        if P.num_vars != 2 or P.variables_used() != {0, 1}:
            raise ValueError("P must be bivariate and depend on both variables")
        object.__setattr__(self, "P", P)

    @property
    def d_source(self):
        return self.P.degree_in(1)

    @property
    def d_target(self):
        return self.P.degree_in(0)

    def _fiber_values(self, p, rho_budget):
        q = self.P.specialize(0, value(p))
        if q.is_zero():
            raise ValueError(f"the whole line x = {value(p)} lies on P = 0")
        return rational_roots(q.univariate_coeffs(), rho_budget)


def fiber(C: Correspondence, p: GroupElement, **kw) -> FiniteSet:
    return C.fiber(p, **kw)


def image(
    C: Correspondence, A: FiniteSet, *, strict: bool = False, rho_budget: int = DEFAULT_RHO_BUDGET
) -> FiniteSet:
    """``C(A)``: the union of the rational fibers over ``A``."""
    if A.group != C.source:
        raise MixedGroups(f"set lives on {A.group}, correspondence on {C.source}")
    out = set()
    for a in A:
        fib = C.fiber(a, rho_budget=rho_budget)
        if strict and not len(fib):
            raise IrrationalFiber(f"no rational points above {a!r}")
        out.update(fib)
    return FiniteSet(C.target, out, check=False)


def degree(C: Correspondence) -> int:
    """``d_source * deg(target closure) + d_target * deg(source closure)``."""
    return C.d_source * CLOSURE_DEGREE + C.d_target * CLOSURE_DEGREE


def is_subgroup_translate(C: Correspondence) -> bool:
    if isinstance(C, Graph):
        src, tgt = C.source, C.target
        if isinstance(src, Multiplicative) and isinstance(tgt, Multiplicative):
            return len(C.phi.terms) == 1
        if isinstance(src, Additive) and isinstance(tgt, Additive):
            return C.phi.total_degree() == 1
        # no nonconstant graph between G_m and G_a is a coset
        return False
    if isinstance(C, (CoordProj, SquareShift)):
        return False
    raise Unsupported("cannot decide whether an implicit curve is a coset")


# -- config JSON ---------------------------------------------------------------


def correspondence_from_json(obj: dict) -> Correspondence:
    kind = obj.get("kind", "").lower()
    source = group_from_json(obj["source"])
    target = group_from_json(obj.get("target", "Ga"))
    if kind == "graph":
        return Graph(source, target, as_poly(obj["phi"], 1))
    if kind == "coordproj":
        return CoordProj(source, target, obj.get("axis", "x"))
    if kind == "squareshift":
        return SquareShift(source, target, as_rational(obj.get("u", "0")))
    if kind == "implicit":
        return Implicit(source, target, as_poly(obj["P"], 2))
    raise ValueError(f"unknown correspondence kind {kind!r}")


def correspondence_to_json(C: Correspondence) -> dict:
    base = {"source": group_to_json(C.source), "target": group_to_json(C.target)}
    if isinstance(C, Graph):
        return {"kind": "graph", "phi": _uni_str(C.phi), **base}
    if isinstance(C, CoordProj):
        return {"kind": "coordproj", "axis": C.axis, **base}
    if isinstance(C, SquareShift):
        return {"kind": "squareshift", "u": rational_str(C.u), **base}
    return {"kind": "implicit", "P": str(C.P).replace("x1", "x").replace("x2", "y"), **base}


def _uni_str(p: MultiPoly) -> str:
    return str(p).replace("x1", "x")


__all__ = [
    "Correspondence",
    "Graph",
    "CoordProj",
    "SquareShift",
    "Implicit",
    "fiber",
    "image",
    "degree",
    "is_subgroup_translate",
    "correspondence_from_json",
    "correspondence_to_json",
]
