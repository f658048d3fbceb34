"""Exact group laws for G_a(Q), G_m(Q) and Weierstrass elliptic curves E(Q).

Rationals are :class:`fractions.Fraction`, which keeps numerator and
denominator coprime with a positive denominator after every operation.

Elements are small immutable tagged values::

    >>> E = Elliptic(0, 1)
    >>> E.op(EcAffine(2, 3), EcAffine(2, 3))
    EcAffine(x=Fraction(0, 1), y=Fraction(1, 1))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import as_rational, rational_str
from .errors import MixedGroups, NotOnGroup


@dataclass(frozen=True)
class Add:
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", as_rational(self.v))

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Mul:
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", as_rational(self.v))

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class EcInfinity:
    def __str__(self):
        return "O"


@dataclass(frozen=True)
class EcAffine:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __str__(self):
        return f"({self.x}, {self.y})"


GroupElement = Union[Add, Mul, EcInfinity, EcAffine]
INFINITY = EcInfinity()

_TAG = {Add: 0, Mul: 1, EcInfinity: 2, EcAffine: 3}


def sort_key(p: GroupElement) -> tuple:
    """Canonical order: variant tag, then (numerator, denominator) pairs."""
    t = type(p)
    if t is Add or t is Mul:
        return (_TAG[t], p.v.numerator, p.v.denominator)
    if t is EcAffine:
        return (3, p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator)
    return (2,)


def value(p: GroupElement) -> Fraction:
    """The underlying rational of an Add or Mul element."""
    if isinstance(p, (Add, Mul)):
        return p.v
    raise TypeError(f"{p!r} has no single rational coordinate")


class _Group:
    element_types: tuple = ()

    def contains(self, p) -> bool:
        raise NotImplementedError

    def _check(self, *ps) -> None:
        for p in ps:
            if not isinstance(p, self.element_types):
                raise MixedGroups(f"{p!r} is not an element of {self}")
            if not self.contains(p):
                raise NotOnGroup(f"{p!r} does not lie on {self}")

    def element(self, raw) -> GroupElement:
        raise NotImplementedError

    def scalar_mul(self, n: int, p: GroupElement) -> GroupElement:
        """``n * p`` by double-and-add; negative ``n`` goes through the inverse."""
        self._check(p)
        if n < 0:
            n, p = -n, self.inverse(p)
        result = self.identity()
        addend = p
        while n:
            if n & 1:
                result = self._op(result, addend)
            n >>= 1
            if n:
                addend = self._op(addend, addend)
        return result

    def op(self, p: GroupElement, q: GroupElement) -> GroupElement:
        self._check(p, q)
        return self._op(p, q)

    def inverse(self, p: GroupElement) -> GroupElement:
        self._check(p)
        return self._inverse(p)


@dataclass(frozen=True)
class Additive(_Group):
    element_types = (Add,)

    def identity(self) -> Add:
        return Add(0)

    def contains(self, p) -> bool:
        return isinstance(p, Add)

    def element(self, raw) -> Add:
        return raw if isinstance(raw, Add) else Add(raw)

    def _op(self, p, q):
        return Add(p.v + q.v)

    def _inverse(self, p):
        return Add(-p.v)

    def scalar_mul(self, n, p):
        self._check(p)
        return Add(n * p.v)

    def __str__(self):
        return "Ga"


@dataclass(frozen=True)
class Multiplicative(_Group):
    element_types = (Mul,)

    def identity(self) -> Mul:
        return Mul(1)

    def contains(self, p) -> bool:
        return isinstance(p, Mul) and p.v != 0

    def element(self, raw) -> Mul:
        return raw if isinstance(raw, Mul) else Mul(raw)

    def _op(self, p, q):
        return Mul(p.v * q.v)

    def _inverse(self, p):
        return Mul(1 / p.v)

    def scalar_mul(self, n, p):
        self._check(p)
        return Mul(p.v**n)

    def __str__(self):
        return "Gm"


@dataclass(frozen=True)
class Elliptic(_Group):
    """The curve ``y^2 = x^3 + a x + b`` with its chord-tangent law."""

    a: Fraction
    b: Fraction
    element_types = (EcInfinity, EcAffine)

    def __post_init__(self):
        a, b = as_rational(self.a), as_rational(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if 4 * a**3 + 27 * b**2 == 0:
            raise ValueError(f"singular curve: a={a}, b={b}")

    def identity(self) -> EcInfinity:
        return INFINITY

    def contains(self, p) -> bool:
        if isinstance(p, EcInfinity):
            return True
        if isinstance(p, EcAffine):
            return p.y * p.y == p.x**3 + self.a * p.x + self.b
        return False

    def element(self, raw) -> GroupElement:
        if isinstance(raw, (EcInfinity, EcAffine)):
            return raw
        if raw is None or raw == "infinity":
            return INFINITY
        if isinstance(raw, dict):
            return EcAffine(raw["x"], raw["y"])
        x, y = raw
        return EcAffine(x, y)

    def _op(self, p, q):
        if isinstance(p, EcInfinity):
            return q
        if isinstance(q, EcInfinity):
            return p
        if p.x == q.x:
            if p.y != q.y or p.y == 0:
                return INFINITY
            lam = (3 * p.x * p.x + self.a) / (2 * p.y)
        else:
            lam = (q.y - p.y) / (q.x - p.x)
        x3 = lam * lam - p.x - q.x
        return EcAffine(x3, lam * (p.x - x3) - p.y)

    def _inverse(self, p):
        if isinstance(p, EcInfinity):
            return p
        return EcAffine(p.x, -p.y)

    def __str__(self):
        return f"E(a={self.a}, b={self.b})"


GroupDescriptor = Union[Additive, Multiplicative, Elliptic]

GA = Additive()
GM = Multiplicative()


def op(g: GroupDescriptor, p: GroupElement, q: GroupElement) -> GroupElement:
    return g.op(p, q)


def inverse(g: GroupDescriptor, p: GroupElement) -> GroupElement:
    return g.inverse(p)


def identity(g: GroupDescriptor) -> GroupElement:
    return g.identity()


def scalar_mul(g: GroupDescriptor, n: int, p: GroupElement) -> GroupElement:
    return g.scalar_mul(n, p)


def on_group(g: GroupDescriptor, p) -> bool:
    return g.contains(p)


# -- JSON -------------------------------------------------------------------


def group_to_json(g: GroupDescriptor):
    if isinstance(g, Elliptic):
        return {"kind": "elliptic", "a": rational_str(g.a), "b": rational_str(g.b)}
    return str(g)


def group_from_json(obj) -> GroupDescriptor:
    if isinstance(obj, str):
        key = obj.strip().lower()
        if key in ("ga", "additive"):
            return GA
        if key in ("gm", "multiplicative"):
            return GM
        raise ValueError(f"unknown group {obj!r}")
    if isinstance(obj, dict) and obj.get("kind", "elliptic").lower() == "elliptic":
        return Elliptic(as_rational(obj["a"]), as_rational(obj["b"]))
    raise ValueError(f"unknown group {obj!r}")


def element_to_json(p: GroupElement):
    if isinstance(p, (Add, Mul)):
        return rational_str(p.v)
    if isinstance(p, EcInfinity):
        return "infinity"
    return {"x": rational_str(p.x), "y": rational_str(p.y)}


def element_from_json(g: GroupDescriptor, obj) -> GroupElement:
    p = g.element(obj)
    if not g.contains(p):
        raise NotOnGroup(f"{obj!r} does not lie on {g}")
    return p
