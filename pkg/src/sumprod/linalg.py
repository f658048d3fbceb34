"""Exact rank and nullspace over Q by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import as_rational, primitive_integer_coeffs


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    # scaling a row by a nonzero constant changes neither rank nor kernel
    out = []
    for row in rows:
        row = [as_rational(v) for v in row]
        if any(row):
            out.append(primitive_integer_coeffs(row))
        else:
            out.append([0] * len(row))
    return out


def bareiss_echelon(
    rows: Sequence[Sequence], ncols: int | None = None
) -> tuple[list[list[int]], list[int]]:
    """Row echelon form of an integer-scaled copy of ``rows``.

    Returns ``(echelon_rows, pivot_columns)``; only the first ``len(pivots)``
    rows are nonzero. Every intermediate entry is an exact integer minor.
    """
    m = _integer_rows(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return len(bareiss_echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : rows @ v == 0}``, one vector per free column.

    Each basis vector is scaled to a primitive integer vector whose first
    nonzero entry is positive.
    """
    if not rows:
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    ech, pivots = bareiss_echelon(rows, ncols)
    rk = len(pivots)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(rk - 1, -1, -1):
            pc = pivots[i]
            s = sum((ech[i][j] * v[j] for j in range(pc + 1, ncols)), Fraction(0))
            v[pc] = -s / ech[i][pc]
        basis.append(normalize_vector(v))
    return basis


def normalize_vector(v: Sequence[Fraction]) -> list[Fraction]:
    ints = primitive_integer_coeffs(v)
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix via Bareiss (used by tests)."""
    n = len(rows)
    m = [[int(v) for v in row] for row in rows]
    sign, prev = 1, 1
    for c in range(n):
        k = next((i for i in range(c, n) if m[i][c] != 0), None)
        if k is None:
            return 0
        if k != c:
            m[c], m[k] = m[k], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
        prev = m[c][c]
    return sign * m[n - 1][n - 1] if n else 1


__all__ = ["bareiss_echelon", "rank", "nullspace", "normalize_vector", "det"]
