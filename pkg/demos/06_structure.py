"""
Covering, unfolding, rank and point counts
==========================================
"""

import random

from sumprod import (
    GA,
    GM,
    Add,
    FiniteSet,
    Mul,
    TorsionSet,
    VarietySpec,
    count_points,
    doubling,
    mult_rank,
    parse,
    ruzsa_cover,
    torsion_unfold,
)
from sumprod.structure import freiman2_violations

A = FiniteSet(GA, [Add(x) for x in (0, 1, 2, 3, 50, 51, 52, 100)])
B = FiniteSet(GA, [Add(x) for x in range(5)])
print("cover:", [str(x) for x in ruzsa_cover(A, B)])

rng = random.Random(0)
S = TorsionSet(1, 360, 24, frozenset(((rng.randint(-2, 2),), rng.randint(0, 60), rng.randint(0, 5)) for _ in range(40)))
cell, lift = torsion_unfold(S)
print(f"{len(S)} points, densest cell {len(cell)}, violations {len(freiman2_violations(cell, lift))}")

print("rank of {2, 3, 6, 5/7}:", mult_rank(FiniteSet(GM, [Mul(2), Mul(3), Mul(6), Mul("5/7")])))

V = VarietySpec(3, [parse("x2*x3 - x1 + 1")], declared_dim=2)
for N in range(3, 9):
    A = FiniteSet(GM, [Mul(2**i if i >= 0 else f"1/{2**-i}") for i in range(-N, N + 1)] + [Mul(3)])
    print(f"N={N}: |A|={len(A)}  K={doubling(A)}  |V cap A^3|={count_points(V, A)}")
