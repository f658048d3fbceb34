"""Constructive additive-structure tools.

* :func:`ruzsa_cover` builds a covering ``A ⊆ X + B - B`` with few translates.
* :func:`torsion_unfold` moves a subset of ``Z^l x Z/n x Z/m`` into
  ``Z^(l+2)`` while keeping every additive quadruple.
* :func:`mult_rank` is the free rank of the subgroup of Q^* spanned by a set.
* :func:`count_points` counts ``|V ∩ A^g|`` by exhaustive, pruned enumeration.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import DEFAULT_RHO_BUDGET, factorize
from .errors import BudgetExceeded, DimensionMismatch, EmptySet, MixedGroups
from .finsets import FiniteSet, difference_set, sumset
from .groups import Additive, Multiplicative, value
from .linalg import rank
from .poly import MultiPoly, as_poly

DEFAULT_TUPLE_BUDGET = 10**8


# -- Ruzsa covering -------------------------------------------------------------


def ruzsa_cover(A: FiniteSet, B: FiniteSet) -> FiniteSet:
    """Greedy maximal ``X ⊆ A`` whose translates ``x + B`` are pairwise disjoint.

    Maximality gives ``A ⊆ X + B - B`` and disjointness gives
    ``|X| <= |A + B| / |B|``. Both are re-checked by enumeration before
    returning.
    """
    if A.group != B.group:
        raise MixedGroups(f"{A.group} vs {B.group}")
    if not len(A) or not len(B):
        raise EmptySet("ruzsa_cover needs nonempty A and B")
    g = A.group
    covered: set = set()
    chosen = []
    for a in A:  # canonical order
        shifted = {g._op(a, b) for b in B}
        if covered.isdisjoint(shifted):
            chosen.append(a)
            covered |= shifted
    X = FiniteSet(g, chosen, check=False)

    bound = -(-len(sumset(A, B)) // len(B))
    if len(X) > bound:
        raise AssertionError(f"|X| = {len(X)} exceeds ceil(|A+B|/|B|) = {bound}")
    if not A.issubset(sumset(X, difference_set(B, B))):
        raise AssertionError("A is not covered by X + B - B")
    return X


# -- torsion unfolding ----------------------------------------------------------


@dataclass(frozen=True)
class TorsionSet:
    """A finite subset of ``Z^l x Z/nZ x Z/mZ``; points are ``(vector, a, b)``."""

    l: int
    n: int
    m: int
    points: frozenset = field(default=frozenset())

    def __post_init__(self):
        if self.l < 0 or self.n < 1 or self.m < 1:
            raise ValueError("need l >= 0 and positive moduli")
        pts = set()
        for vec, a, b in self.points:
            vec = tuple(int(x) for x in vec)
            if len(vec) != self.l:
                raise DimensionMismatch(f"vector {vec} is not in Z^{self.l}")
            pts.add((vec, int(a) % self.n, int(b) % self.m))
        object.__setattr__(self, "points", frozenset(pts))

    def __len__(self):
        return len(self.points)

    def add(self, s, t):
        return (
            tuple(x + y for x, y in zip(s[0], t[0])),
            (s[1] + t[1]) % self.n,
            (s[2] + t[2]) % self.m,
        )


def cell_index(residue: int, modulus: int) -> int:
    """The ``i`` with ``i*mod/10 <= residue < (i+1)*mod/10``."""
    return 10 * residue // modulus


def torsion_unfold(S: TorsionSet) -> tuple[TorsionSet, dict]:
    """Densest of the 100 residue cells, with its lift into ``Z^(l+2)``.

    Each residue coordinate is split into ten intervals; by pigeonhole some
    cell holds at least ``|S|/100`` points. Ties go to the smallest ``(i, j)``.
    Inside one cell, residue sums of two points differ by less than
    ``modulus/5``, so lifting residues to ``0..modulus-1`` turns every additive
    quadruple into an integer one and back.

    Returns the cell as a TorsionSet and a dict mapping each of its points to
    its integer lift.
    """
    if not len(S):
        raise EmptySet("torsion_unfold of an empty set")
    counts = Counter((cell_index(a, S.n), cell_index(b, S.m)) for _, a, b in S.points)
    top = max(counts.values())
    cell = min(c for c, k in counts.items() if k == top)
    sub = [p for p in S.points if (cell_index(p[1], S.n), cell_index(p[2], S.m)) == cell]
    lift = {p: (*p[0], p[1], p[2]) for p in sub}
    return TorsionSet(S.l, S.n, S.m, frozenset(sub)), lift


def freiman2_violations(
    S: TorsionSet,
    lift: dict,
    samples: int | None = None,
    seed: int = 0,
    *,
    brute: bool = False,
) -> list:
    """Quadruples on which ``lift`` fails to be a Freiman 2-isomorphism.

    With ``samples`` set, checks that many random quadruples. Otherwise every
    quadruple is covered: by default through the pair sums (``lift`` is a
    2-isomorphism exactly when the group sum and the lifted sum induce the same
    partition of ordered pairs), returning one witness per broken class; with
    ``brute=True`` by the literal four-fold loop, returning every violation.
    """
    pts = sorted(S.points)

    def vadd(u, v):
        return tuple(x + y for x, y in zip(u, v))

    def violates(s1, s2, s3, s4):
        in_group = S.add(s1, s2) == S.add(s3, s4)
        return in_group != (vadd(lift[s1], lift[s2]) == vadd(lift[s3], lift[s4]))

    if samples is not None:
        rng = random.Random(seed)
        quads = (tuple(rng.choice(pts) for _ in range(4)) for _ in range(samples))
        return [q for q in quads if violates(*q)]
    if brute:
        return [q for q in itertools.product(pts, repeat=4) if violates(*q)]

    by_group: dict = {}
    by_lift: dict = {}
    bad = []
    for s1 in pts:
        for s2 in pts:
            gs, ls = S.add(s1, s2), vadd(lift[s1], lift[s2])
            for key, table in ((gs, by_group), (ls, by_lift)):
                first = table.setdefault(key, (s1, s2))
                if violates(*first, s1, s2):
                    bad.append((*first, s1, s2))
    return bad


# -- multiplicative rank ---------------------------------------------------------


def exponent_vectors(
    A: FiniteSet, rho_budget: int = DEFAULT_RHO_BUDGET
) -> tuple[list[int], list[list[int]]]:
    """Primes used and one prime-exponent row per element (signs dropped)."""
    if not isinstance(A.group, Multiplicative):
        raise MixedGroups("exponent vectors need a set in G_m")
    rows = []
    for p in A:
        q = value(p)
        num = factorize(q.numerator, rho_budget)
        den = factorize(q.denominator, rho_budget)
        exps = dict(num)
        for prime, e in den.items():
            exps[prime] = exps.get(prime, 0) - e
        rows.append(exps)
    primes = sorted({p for r in rows for p in r})
    return primes, [[r.get(p, 0) for p in primes] for r in rows]


def mult_rank(A: FiniteSet, rho_budget: int = DEFAULT_RHO_BUDGET) -> int:
    """Rank of the lattice spanned by the prime-exponent vectors of ``A``."""
    primes, rows = exponent_vectors(A, rho_budget)
    if not primes:
        return 0
    return rank(rows, len(primes))


# -- varieties ---------------------------------------------------------------------


@dataclass(frozen=True)
class VarietySpec:
    num_vars: int
    equations: tuple
    declared_dim: int | None = None
    group: object = Multiplicative()

    def __post_init__(self):
        eqs = tuple(as_poly(e, self.num_vars) for e in self.equations)
        for e in eqs:
            if e.num_vars != self.num_vars:
                raise DimensionMismatch("all equations must share num_vars")
        if not isinstance(self.group, (Additive, Multiplicative)):
            raise ValueError("varieties live in G_a^g or G_m^g")
        object.__setattr__(self, "equations", eqs)

    def contains(self, point: Sequence) -> bool:
        if len(point) != self.num_vars:
            raise DimensionMismatch(f"expected {self.num_vars} coordinates")
        pt = [Fraction(value(x)) if hasattr(x, "v") else Fraction(x) for x in point]
        if isinstance(self.group, Multiplicative) and any(x == 0 for x in pt):
            return False
        return all(e.evaluate(pt) == 0 for e in self.equations)

    def product(self, other: "VarietySpec") -> "VarietySpec":
        """``V x W`` on disjoint variable blocks."""
        if self.group != other.group:
            raise MixedGroups("product of varieties in different groups")
        n = self.num_vars + other.num_vars
        shift = [MultiPoly.variable(n, self.num_vars + i) for i in range(other.num_vars)]
        eqs = [e.embed(n) for e in self.equations] + [e.compose(shift) for e in other.equations]
        dim = None
        if self.declared_dim is not None and other.declared_dim is not None:
            dim = self.declared_dim + other.declared_dim
        return VarietySpec(n, tuple(eqs), dim, self.group)


def _compile(eq: MultiPoly):
    terms = [(c, [(i, k) for i, k in enumerate(e) if k]) for e, c in eq.terms.items()]

    def f(pt):
        total = 0
        for c, mono in terms:
            t = c
            for i, k in mono:
                t *= pt[i] ** k
            total += t
        return total

    return f


def _count_from(args) -> int:
    V, vals, prefix = args
    g = V.num_vars
    by_depth: list[list] = [[] for _ in range(g + 1)]
    for e in V.equations:
        used = e.variables_used()
        by_depth[max(used) + 1 if used else 0].append(_compile(e))
    if any(f(()) != 0 for f in by_depth[0]):
        return 0
    pt = list(prefix) + [None] * (g - len(prefix))
    for depth in range(1, len(prefix) + 1):
        if any(f(pt) != 0 for f in by_depth[depth]):
            return 0

    def rec(depth):
        if depth == g:
            return 1
        total = 0
        checks = by_depth[depth + 1]
        for x in vals:
            pt[depth] = x
            if all(f(pt) == 0 for f in checks):
                total += rec(depth + 1)
        pt[depth] = None
        return total

    return rec(len(prefix))


def count_points(
    V: VarietySpec, A: FiniteSet, budget: int = DEFAULT_TUPLE_BUDGET, workers: int = 1
) -> int:
    """Exact ``|V ∩ A^g|``.

    Enumeration goes variable by variable and drops a branch as soon as an
    equation whose variables are all assigned fails. ``workers > 1`` splits
    the first coordinate across processes.
    """
    if A.group != V.group:
        raise MixedGroups(f"set in {A.group}, variety in {V.group}")
    total_tuples = len(A) ** V.num_vars
    if total_tuples > budget:
        raise BudgetExceeded(f"|A|^g = {total_tuples} exceeds the budget {budget}")
    vals = [value(a) for a in A]
    if V.num_vars == 0 or workers <= 1 or len(vals) < 2:
        return _count_from((V, vals, ()))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_from, [(V, vals, (x,)) for x in vals]))


def brute_force_count(V: VarietySpec, A: FiniteSet) -> int:
    """Unpruned enumeration of ``A^g``: the reference for :func:`count_points`."""
    vals = [value(a) for a in A]
    return sum(1 for pt in itertools.product(vals, repeat=V.num_vars) if V.contains(pt))


__all__ = [
    "ruzsa_cover",
    "TorsionSet",
    "torsion_unfold",
    "freiman2_violations",
    "cell_index",
    "mult_rank",
    "exponent_vectors",
    "VarietySpec",
    "count_points",
    "brute_force_count",
    "DEFAULT_TUPLE_BUDGET",
]
