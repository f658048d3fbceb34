"""Integer and rational kernels: parsing, square roots, factorization, rational roots.

Factorization is trial division by the primes below ``TRIAL_LIMIT`` followed by
Brent's variant of Pollard rho. Rho iterations are counted against an explicit
budget; running out raises :class:`FactorizationBudgetExceeded` rather than
returning a partial factorization.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .errors import FactorizationBudgetExceeded

TRIAL_LIMIT = 10**6
DEFAULT_RHO_BUDGET = 2_000_000

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Nonnegative square root of ``q`` if it is a rational square, else None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_LIMIT + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first 20 prime bases (deterministic below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class _Budget:
    def __init__(self, steps: int):
        self.left = steps

    def spend(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise FactorizationBudgetExceeded("Pollard rho step budget exhausted")


def _brent(n: int, budget: _Budget, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget.spend(steps)
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                budget.spend()
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> Counter:
    """Prime factorization of ``|n|`` as a Counter ``{prime: exponent}``.

    ``factorize(0)`` raises ValueError; ``factorize(±1)`` is empty.
    """
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out: Counter = Counter()
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    if n == 1:
        return out
    budget = _Budget(rho_budget)
    rng = random.Random(n)  # seeded by the input: deterministic
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < TRIAL_LIMIT * TRIAL_LIMIT or is_probable_prime(m):
            out[m] += 1
            continue
        d = _brent(m, budget, rng)
        stack.extend((d, m // d))
    return out


def divisors(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    divs = [1]
    for p, e in factorize(n, rho_budget).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def primitive_integer_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    """Scale rational coefficients to coprime integers (same roots)."""
    coeffs = [as_rational(c) for c in coeffs]
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * den) for c in coeffs]
    g = reduce(math.gcd, ints, 0)
    return [c // g for c in ints] if g else ints


def rational_roots(coeffs: Sequence, rho_budget: int = DEFAULT_RHO_BUDGET) -> list[Fraction]:
    """Distinct rational roots of ``sum(coeffs[i] * x**i)``, sorted.

    ``coeffs`` is low-degree first. The zero polynomial has no well-defined
    root set and raises ValueError.
    """
    c = primitive_integer_coeffs(coeffs)
    while c and c[-1] == 0:
        c.pop()
    if not c:
        raise ValueError("zero polynomial has every number as a root")
    roots: set[Fraction] = set()
    if c[0] == 0:
        roots.add(Fraction(0))
        k = next(i for i, v in enumerate(c) if v)
        c = c[k:]
    if len(c) == 1:
        return sorted(roots)
    deg = len(c) - 1
    p_candidates = divisors(c[0], rho_budget)
    for q in divisors(c[-1], rho_budget):
        qpow = [q**k for k in range(deg + 1)]
        for p in p_candidates:
            if math.gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                # homogeneous Horner: sum c_i p^i q^(deg-i) == 0 <=> p/q is a root
                acc = c[deg]
                for i in range(deg - 1, -1, -1):
                    acc = acc * sp + c[i] * qpow[deg - i]
                if acc == 0:
                    roots.add(Fraction(sp, q))
    return sorted(roots)
