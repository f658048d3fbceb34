"""
Sumsets, doubling and boxes
===========================
"""

from sumprod import GA, GM, Add, FiniteSet, Mul, SubgroupBasis, box, doubling, iterated, sumset

A = FiniteSet(GA, [Add(i) for i in range(10)])
print("AP of length 10:  |A+A| =", len(sumset(A, A)), " K =", doubling(A))
print("3A has", len(iterated(A, 3)), "elements")

# a random-looking set has doubling close to the maximum (|A|+1)/2
S = FiniteSet(GA, [Add(x) for x in (1, 2, 5, 11, 24, 50)])
print("Sidon set: K =", doubling(S))

# boxes n1*2 + n2*3 + n3*5 (written multiplicatively) with |ni| <= L
basis = SubgroupBasis(GM, [Mul(2), Mul(3), Mul(5)])
for L in (1, 2, 3):
    B = box(basis, L)
    print(f"L={L}: |A|={len(B):4d}  |A.A|={len(sumset(B, B)):5d}  K={float(doubling(B)):.3f}  (bound 8)")
