"""
Progressions among coordinates of rational points
=================================================

Longest arithmetic, geometric and consecutive-square progressions inside the
x- and y-coordinates of a box of points on y^2 = x^3 + 17.
"""

from sumprod import (
    GA,
    CoordProj,
    Elliptic,
    GapSpec,
    Mul,
    SubgroupBasis,
    box,
    gap_enumerate,
    image,
    longest_ap,
    longest_gp,
    longest_square_ap,
    sumset,
)
from sumprod.groups import GM

print(longest_ap([1, 3, 5, 9]))
print(longest_gp([2, 6, 18, 19]))
print(longest_square_ap([1, 9, 25]))

E = Elliptic(0, 17)
basis = SubgroupBasis(E, [(-2, 3), (-1, 4)])
for L in (1, 2, 3):
    pts = box(basis, L)
    xs = [p.v for p in image(CoordProj(E, GA, "x"), pts)]
    ys = [p.v for p in image(CoordProj(E, GA, "y"), pts)]
    print(
        f"L={L}: {len(pts):3d} points  "
        f"x: AP {longest_ap(xs).length} GP {longest_gp(xs).length} sq {longest_square_ap(xs).length}  "
        f"y: AP {longest_ap(ys).length} GP {longest_gp(ys).length} sq {longest_square_ap(ys).length}"
    )

# hypercubes inside generalized progressions double by at most 3^k
for k in range(1, 6):
    P, proper = gap_enumerate(GapSpec(GM, Mul(1), [Mul(p) for p in (2, 3, 5, 7, 11)[:k]], [2] * k))
    print(f"k={k}: proper={proper} |P+P|={len(sumset(P, P))} 3^k={3**k}")
