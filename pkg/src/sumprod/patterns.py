"""Generalized arithmetic progressions and progression detection in sets of rationals.

The three detectors look for the patterns that cannot be long inside the
coordinates of rational points on an elliptic curve: arithmetic progressions,
geometric progressions and consecutive squares ``u^2, (u+d)^2, ..., (u+ld)^2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import as_rational, rational_sqrt, rational_str
from .errors import EmptySet
from .finsets import FiniteSet, sumset
from .groups import GroupDescriptor, GroupElement
from .poly import MultiPoly, variables


@dataclass(frozen=True)
class GapSpec:
    group: GroupDescriptor
    base: GroupElement
    steps: tuple
    lengths: tuple

    def __post_init__(self):
        g = self.group
        object.__setattr__(self, "base", g.element(self.base))
        object.__setattr__(self, "steps", tuple(g.element(p) for p in self.steps))
        object.__setattr__(self, "lengths", tuple(int(L) for L in self.lengths))
        if not self.steps or len(self.steps) != len(self.lengths):
            raise ValueError("need k >= 1 steps and one length per step")
        if any(L < 2 for L in self.lengths):
            raise ValueError("every length must be at least 2")
        for p in (self.base, *self.steps):
            if not g.contains(p):
                raise ValueError(f"{p!r} is not on {g}")

    @property
    def rank(self) -> int:
        return len(self.steps)

    @property
    def volume(self) -> int:
        return math.prod(self.lengths)

    def doubled(self) -> "GapSpec":
        """The progression with lengths ``2L - 1`` and base ``2 P0``: it contains ``P + P``."""
        g = self.group
        return GapSpec(g, g.op(self.base, self.base), self.steps, [2 * L - 1 for L in self.lengths])


def gap_enumerate(spec: GapSpec) -> tuple[FiniteSet, bool]:
    """All points ``P0 + l1 P1 + ... + lk Pk`` and whether the progression is proper."""
    g = spec.group
    result = FiniteSet(g, [spec.base], check=False)
    for step, L in zip(spec.steps, spec.lengths):
        run = [g.identity()]
        for _ in range(L - 1):
            run.append(g.op(run[-1], step))
        result = sumset(result, FiniteSet(g, run, check=False))
    return result, len(result) == spec.volume


def hypercube(spec: GapSpec) -> GapSpec:
    """The sub-progression with every length set to 2."""
    return GapSpec(spec.group, spec.base, spec.steps, [2] * spec.rank)


@dataclass(frozen=True)
class PatternReport:
    kind: str
    length: int
    witness: tuple[Fraction, Fraction] | None

    def terms(self) -> list[Fraction]:
        """The progression the witness describes (squared for ``SquareAP``)."""
        if not self.length:
            return []
        u, d = self.witness
        if self.kind == "GP":
            return [u * d**i for i in range(self.length)]
        seq = [u + i * d for i in range(self.length)]
        return [t * t for t in seq] if self.kind == "SquareAP" else seq

    def to_json(self) -> dict:
        w = None if self.witness is None else [rational_str(x) for x in self.witness]
        return {"kind": self.kind, "length": self.length, "witness": w}

    @classmethod
    def from_json(cls, obj) -> "PatternReport":
        w = obj.get("witness")
        return cls(obj["kind"], int(obj["length"]), None if w is None else tuple(map(Fraction, w)))


def _as_values(S: Iterable) -> list[Fraction]:
    vals = sorted({as_rational(getattr(x, "v", x)) for x in S})
    if not vals:
        raise EmptySet("pattern search on an empty set")
    return vals


def longest_ap(S: Iterable) -> PatternReport:
    """Longest ``u, u+d, ..., u+ld`` (``d != 0``) inside ``S``.

    Dynamic program over ordered pairs; ties go to the smallest first term,
    then the smallest step.
    """
    xs = _as_values(S)
    index = {x: i for i, x in enumerate(xs)}
    best = (-1, xs[0], Fraction(0))
    dp: dict[tuple[int, int], int] = {}
    for j, xj in enumerate(xs):
        for i in range(j):
            xi = xs[i]
            d = xj - xi
            k = index.get(xi - d)
            L = dp[k, i] + 1 if k is not None else 2
            dp[i, j] = L
            cand = (-L, xj - (L - 1) * d, d)
            if cand < best:
                best = cand
    L = -best[0]
    return PatternReport("AP", L, (best[1], best[2]))


def longest_gp(S: Iterable) -> PatternReport:
    """Longest ``u, uq, ..., uq^l`` inside ``S`` with ``q`` not in ``{0, 1, -1}``.

    Zeros are ignored. Chains are read in order of increasing absolute value,
    so the reported ratio satisfies ``|q| > 1``.
    """
    vals = _as_values(S)
    xs = sorted((x for x in vals if x), key=lambda x: (abs(x), x))
    if not xs:
        return PatternReport("GP", 0, None)
    index = {x: i for i, x in enumerate(xs)}
    best = (-1, xs[0], Fraction(1))
    dp: dict[tuple[int, int], int] = {}
    for j, xj in enumerate(xs):
        for i in range(j):
            xi = xs[i]
            if abs(xi) == abs(xj):
                continue
            q = xj / xi
            k = index.get(xi / q)
            L = dp[k, i] + 1 if k is not None else 2
            dp[i, j] = L
            cand = (-L, xj / q ** (L - 1), q)
            if cand < best:
                best = cand
    return PatternReport("GP", -best[0], (best[1], best[2]))


def longest_square_ap(S: Iterable) -> PatternReport:
    """Longest ``u^2, (u+d)^2, ..., (u+ld)^2`` of distinct squares inside ``S``.

    Runs over the signed square roots of the rational squares in ``S``. The
    terms ``u + id`` may change sign, but two terms with the same absolute
    value would repeat a square and are not allowed in one chain. A chain and
    its negation give the same squares; the one with positive mean is
    reported, and ties go to the smallest step, then the smallest first term.
    """
    vals = _as_values(S)
    roots = set()
    for a in vals:
        r = rational_sqrt(a)
        if r is not None:
            roots.update((r, -r))
    if not roots:
        return PatternReport("SquareAP", 0, None)
    xs = sorted(roots)
    members = set(xs)
    zero = Fraction(0)
    best = (-1, zero, xs[-1])  # (-length, step, first term)
    for r in xs:
        if r >= 0:
            best = min(best, (-1, zero, r))
            break
    for j, xj in enumerate(xs):
        for i in range(j):
            d = xj - xs[i]
            if xs[i] - d in members:
                continue  # not the start of a maximal run
            run = [xs[i], xj]
            while run[-1] + d in members:
                run.append(run[-1] + d)
            seen: dict[Fraction, int] = {}
            left = 0
            for right, t in enumerate(run):
                a = abs(t)
                if a in seen and seen[a] >= left:
                    left = seen[a] + 1
                seen[a] = right
                n = right - left + 1
                if n < 2 or n < -best[0]:
                    continue
                u = run[left]
                if u + run[right] < 0:  # negate: same squares, positive mean
                    u = -run[right]
                cand = (-n, d, u)
                if cand < best:
                    best = cand
    return PatternReport("SquareAP", -best[0], (best[2], best[1]))


def canonical_degree(d: Sequence[int], t: int) -> int:
    """``d1 + ... + dt + t - 3``; positive values flag general type in the smooth case."""
    if len(d) != t:
        raise ValueError(f"need {t} degrees, got {len(d)}")
    if any(int(x) < 1 for x in d) or t < 1:
        raise ValueError("degrees and t must be positive")
    return sum(int(x) for x in d) + t - 3


def arithmetic_equations(t: int) -> list[MultiPoly]:
    """``Z_{j+2} - 2 Z_{j+1} + Z_j`` for ``j = 1 .. t-2``: their common zeros are the APs."""
    Z = variables(t)
    return [Z[j + 2] - 2 * Z[j + 1] + Z[j] for j in range(t - 2)]


def geometric_equations(t: int) -> list[MultiPoly]:
    """``Z_{j+1} Z_1 - Z_j Z_2`` for ``j = 2 .. t-1``: GPs once ``Z_1 != 0``."""
    Z = variables(t)
    return [Z[j] * Z[0] - Z[j - 1] * Z[1] for j in range(2, t)]
