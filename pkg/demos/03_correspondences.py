"""
Correspondences and expansion
=============================

Images of finite sets under algebraic correspondences, and the sumset
``C(A) + C(A)`` for the graph of ``x + 1`` on a geometric progression.
"""

from sumprod import (
    GA,
    GM,
    CoordProj,
    EcAffine,
    Elliptic,
    FiniteSet,
    Graph,
    Implicit,
    Mul,
    degree,
    doubling,
    image,
    image_sum,
    is_subgroup_translate,
    parse,
)

E = Elliptic(0, 1)
pts = FiniteSet(E, [EcAffine(2, 3), EcAffine(2, -3), EcAffine(0, 1)])
print("x-coordinates:", [str(p) for p in image(CoordProj(E, GA, "x"), pts)])

roots = Implicit(GM, GM, parse("y^2 - x"))
print("square roots:", [str(p) for p in image(roots, FiniteSet(GM, [Mul(1), Mul(4), Mul(2)]))])

for d in range(1, 6):
    print(f"graph of degree {d}: correspondence degree {degree(Graph(GM, GM, parse(f'x^{d} + 1')))}")

print("5x^3 is a coset:", is_subgroup_translate(Graph(GM, GM, parse("5*x^3"))))
print("x+1 is a coset:", is_subgroup_translate(Graph(GM, GM, parse("x + 1"))))

# A has doubling below 2 yet C(A) + C(A) is as large as it can be
C = Graph(GM, GA, parse("x + 1"))
for n in (10, 50, 100):
    A = FiniteSet(GM, [Mul(2**i) for i in range(n)])
    print(f"n={n:3d}  K={float(doubling(A)):.3f}  |C(A)+C(A)|={len(image_sum([C, C], A))}  n(n+1)/2={n * (n + 1) // 2}")
