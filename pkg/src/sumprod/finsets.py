"""Finite sets in one group: sumsets, iterated sumsets, doubling, boxes."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .errors import EmptySet, MixedGroups, NotOnGroup
from .groups import (
    GroupDescriptor,
    Add,
    EcAffine,
    EcInfinity,
    GroupElement,
    Mul,
    element_from_json,
    element_to_json,
    sort_key,
)

if TYPE_CHECKING:
    from .corresp import Correspondence


_ELEMENT_TYPES = (Add, Mul, EcInfinity, EcAffine)


class FiniteSet:
    """An immutable, deduplicated, canonically ordered set of group elements."""

    __slots__ = ("group", "elements", "_members")

    def __init__(self, group: GroupDescriptor, elements: Iterable = (), *, check: bool = True):
        members = set()
        for raw in elements:
            if (
                check
                and isinstance(raw, _ELEMENT_TYPES)
                and not isinstance(raw, group.element_types)
            ):
                raise MixedGroups(f"{raw!r} does not belong to {group}")
            p = group.element(raw) if check else raw
            if check and not group.contains(p):
                raise NotOnGroup(f"{raw!r} is not an element of {group}")
            members.add(p)
        self.group = group
        self._members = frozenset(members)
        self.elements = tuple(sorted(members, key=sort_key))

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, p):
        return p in self._members

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.group == other.group and self._members == other._members

    def __hash__(self):
        return hash((self.group, self._members))

    def __repr__(self):
        shown = ", ".join(map(str, (element_to_json(p) for p in self.elements[:8])))
        more = ", ..." if len(self) > 8 else ""
        return f"FiniteSet({self.group}, {{{shown}{more}}})"

    def union(self, other: "FiniteSet") -> "FiniteSet":
        _same_group(self, other)
        return FiniteSet(self.group, self._members | other._members, check=False)

    def issubset(self, other: "FiniteSet") -> bool:
        return self.group == other.group and self._members <= other._members

    def translate(self, t: GroupElement) -> "FiniteSet":
        g = self.group
        return FiniteSet(g, (g.op(t, a) for a in self.elements), check=False)

    def negate(self) -> "FiniteSet":
        g = self.group
        return FiniteSet(g, (g.inverse(a) for a in self.elements), check=False)

    def to_json(self) -> list:
        return [element_to_json(p) for p in self.elements]

    @classmethod
    def from_json(cls, group: GroupDescriptor, data: Sequence) -> "FiniteSet":
        return cls(group, (element_from_json(group, x) for x in data), check=False)


def _same_group(*sets: FiniteSet) -> None:
    g = sets[0].group
    for s in sets[1:]:
        if s.group != g:
            raise MixedGroups(f"{g} vs {s.group}")


def _partial_sumset(args):
    g, chunk, B = args
    op = g._op
    return {op(a, b) for a in chunk for b in B}


def sumset(A: FiniteSet, B: FiniteSet, workers: int = 1) -> FiniteSet:
    """``A + B`` in the ambient group (the product set under G_m).

    With ``workers > 1`` the rows of ``A`` are split across processes; the
    merged result is identical to the serial one.
    """
    _same_group(A, B)
    g = A.group
    if workers > 1 and len(A) * len(B) >= 20_000:
        chunks = [A.elements[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_partial_sumset, [(g, c, B.elements) for c in chunks])
            out: set = set().union(*parts)
    else:
        out = _partial_sumset((g, A.elements, B.elements))
    return FiniteSet(g, out, check=False)


def difference_set(A: FiniteSet, B: FiniteSet) -> FiniteSet:
    """``A - B``."""
    return sumset(A, B.negate())


def iterated(A: FiniteSet, g: int, workers: int = 1) -> FiniteSet:
    """The g-fold sumset ``gA`` (``A^(g)`` under G_m)."""
    if g < 1:
        raise ValueError("g must be a positive integer")
    result = A
    for _ in range(g - 1):
        result = sumset(result, A, workers)
    return result


def doubling(A: FiniteSet, workers: int = 1) -> Fraction:
    """``|A + A| / |A|`` as an exact rational."""
    if not len(A):
        raise EmptySet("doubling of the empty set")
    return Fraction(len(sumset(A, A, workers)), len(A))


@dataclass(frozen=True)
class SubgroupBasis:
    group: GroupDescriptor
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.group.element(p) for p in self.generators)
        for p in gens:
            if not self.group.contains(p):
                raise NotOnGroup(f"generator {p!r} is not on {self.group}")
        object.__setattr__(self, "generators", gens)

    @property
    def rank_bound(self) -> int:
        return len(self.generators)


def multiples(g: GroupDescriptor, p: GroupElement, L: int) -> list[GroupElement]:
    """``[-L p, ..., L p]`` computed incrementally with 2L group operations."""
    pos = [g.identity()]
    for _ in range(L):
        pos.append(g._op(pos[-1], p))
    neg = [g._inverse(q) for q in pos[:0:-1]]
    return neg + pos


def box(basis: SubgroupBasis, L: int, base: GroupElement | None = None) -> FiniteSet:
    """``{n1 g1 + ... + nr gr : |ni| <= L}``, optionally translated by ``base``.

    Generator independence is not checked, so the result can be smaller than
    ``(2L+1)^r``.
    """
    if L < 1:
        raise ValueError("L must be a positive integer")
    g = basis.group
    result = FiniteSet(g, [g.identity() if base is None else g.element(base)])
    for gen in basis.generators:
        result = sumset(result, FiniteSet(g, multiples(g, gen, L), check=False))
    return result


def image_sum(Cs: Sequence["Correspondence"], A: FiniteSet, *, strict: bool = False) -> FiniteSet:
    """``C1(A) + ... + Cg(A)`` in the common target group."""
    from .corresp import image

    if not Cs:
        raise ValueError("at least one correspondence is required")
    for C in Cs:
        if C.source != A.group:
            raise MixedGroups(f"correspondence source {C.source} != set group {A.group}")
        if C.target != Cs[0].target:
            raise MixedGroups("correspondences have different targets")
    result = image(Cs[0], A, strict=strict)
    for C in Cs[1:]:
        result = sumset(result, image(C, A, strict=strict))
    return result


def stats_csv(sets: Iterable[FiniteSet]) -> str:
    """CSV rows ``size,sumset_size,doubling`` for each set."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["size", "sumset_size", "doubling"])
    for A in sets:
        k = doubling(A)
        w.writerow([len(A), k * len(A), f"{k.numerator}/{k.denominator}"])
    return buf.getvalue()


def dumps(A: FiniteSet) -> str:
    return json.dumps(A.to_json())
