"""Sparse multivariate polynomials over Q.

A :class:`MultiPoly` maps exponent tuples to nonzero Fractions. Text input
follows ``c*x1^e1*...*xg^eg`` terms joined by ``+``/``-``; the single letters
``x, y, z, w`` are accepted as aliases for ``x1 .. x4``.

>>> P = parse("x*y + y*z + z*x")
>>> P.num_vars, P.degree_profile()
(3, (1, 1, 1))
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import as_rational
from .errors import DimensionMismatch

LETTERS = "xyzw"


class MultiPoly:
    __slots__ = ("num_vars", "terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple, object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clean: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars:
                raise DimensionMismatch(f"exponent {exps} has length != {num_vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.num_vars = num_vars
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, num_vars: int, c) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "MultiPoly":
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): 1})

    @classmethod
    def from_univariate(cls, coeffs: Sequence) -> "MultiPoly":
        """Univariate polynomial from low-degree-first coefficients."""
        return cls(1, {(i,): c for i, c in enumerate(coeffs)})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def degree_profile(self) -> tuple[int, ...]:
        return tuple(self.degree_in(i) for i in range(self.num_vars))

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def support(self) -> list[tuple]:
        return sorted(self.terms)

    def univariate_coeffs(self) -> list[Fraction]:
        if self.num_vars != 1:
            raise DimensionMismatch("not a univariate polynomial")
        deg = self.total_degree()
        return [self.terms.get((k,), Fraction(0)) for k in range(deg + 1)]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.num_vars != self.num_vars:
                raise DimensionMismatch(f"{self.num_vars} vs {other.num_vars} variables")
            return other
        return MultiPoly.constant(self.num_vars, as_rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.num_vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.num_vars == other.num_vars and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def partial(self, i: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return MultiPoly(self.num_vars, out)

    def gradient(self) -> list["MultiPoly"]:
        return [self.partial(i) for i in range(self.num_vars)]

    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.num_vars:
            raise DimensionMismatch(f"expected {self.num_vars} coordinates, got {len(point)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x**k
            total += t
        return total

    def compose(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute ``x_i -> images[i]``; all images share one ring."""
        if len(images) != self.num_vars:
            raise DimensionMismatch("one image per variable required")
        if not images:
            return self
        n = images[0].num_vars
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.constant(n, 1)} for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * images[i]
            return cache[k]

        total = MultiPoly(n)
        for e, c in self.terms.items():
            t = MultiPoly.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return total

    def specialize(self, i: int, val) -> "MultiPoly":
        """Set ``x_i = val`` and drop that variable."""
        val = as_rational(val)
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            r = e[:i] + e[i + 1 :]
            out[r] = out.get(r, 0) + c * val ** e[i]
        return MultiPoly(self.num_vars - 1, out)

    def embed(self, num_vars: int) -> "MultiPoly":
        """Same polynomial viewed in a ring with extra trailing variables."""
        if num_vars < self.num_vars:
            raise DimensionMismatch("cannot embed into fewer variables")
        pad = (0,) * (num_vars - self.num_vars)
        return MultiPoly(num_vars, {e + pad: c for e, c in self.terms.items()})

    # -- text ---------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.num_vars}, {str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]\w*)|(\*\*|\^|[-+*]))")


def _var_index(name: str) -> int:
    m = re.fullmatch(r"[xX](\d+)", name)
    if m:
        idx = int(m.group(1))
        if idx < 1:
            raise ValueError(f"variables are 1-indexed: {name}")
        return idx - 1
    if name.lower() in LETTERS and len(name) == 1:
        return LETTERS.index(name.lower())
    raise ValueError(f"unknown variable {name!r}")


def parse(text: str, num_vars: int | None = None) -> MultiPoly:
    """Parse ``c*x1^e1*...`` terms joined by ``+``/``-``.

    ``num_vars`` defaults to the largest variable index that appears.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        tokens.append((m.group(1), m.group(2), m.group(3)))
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial")

    terms: list[tuple[Fraction, dict[int, int]]] = []
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i][2] in ("+", "-"):
            if tokens[i][2] == "-":
                sign = -sign
            i += 1
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        expect_factor = True
        while i < n and expect_factor:
            num, name, sym = tokens[i]
            if num is not None:
                coeff *= Fraction(num)
                i += 1
            elif name is not None:
                idx = _var_index(name)
                i += 1
                power = 1
                if i < n and tokens[i][2] in ("^", "**"):
                    if i + 1 >= n or tokens[i + 1][0] is None or "/" in tokens[i + 1][0]:
                        raise ValueError("exponents must be nonnegative integers")
                    power = int(tokens[i + 1][0])
                    i += 2
                exps[idx] = exps.get(idx, 0) + power
            else:
                raise ValueError(f"unexpected {sym!r} in polynomial {text!r}")
            if i < n and tokens[i][2] == "*":
                i += 1
            else:
                expect_factor = False
        if expect_factor:
            raise ValueError(f"dangling operator in {text!r}")
        terms.append((coeff, exps))
        if i < n and tokens[i][2] not in ("+", "-"):
            raise ValueError(f"unexpected token in {text!r}")

    width = max((max(e) + 1 for _, e in terms if e), default=0)
    if num_vars is None:
        num_vars = max(width, 1)
    elif width > num_vars:
        raise DimensionMismatch(f"{text!r} uses {width} variables, ring has {num_vars}")
    out: dict[tuple, Fraction] = {}
    for c, e in terms:
        key = tuple(e.get(k, 0) for k in range(num_vars))
        out[key] = out.get(key, 0) + c
    return MultiPoly(num_vars, out)


def as_poly(obj, num_vars: int | None = None) -> MultiPoly:
    if isinstance(obj, MultiPoly):
        if num_vars is not None and obj.num_vars != num_vars:
            return obj.embed(num_vars)
        return obj
    return parse(obj, num_vars)


def variables(num_vars: int) -> list[MultiPoly]:
    return [MultiPoly.variable(num_vars, i) for i in range(num_vars)]


def product_of(polys: Iterable[MultiPoly], num_vars: int) -> MultiPoly:
    out = MultiPoly.constant(num_vars, 1)
    for p in polys:
        out = out * p
    return out
