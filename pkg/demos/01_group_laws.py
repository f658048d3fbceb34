"""
Three group laws over the rationals
===================================

The additive line, the multiplicative line and a Weierstrass curve, all with
exact fractions.
"""

from fractions import Fraction

from sumprod import GA, GM, INFINITY, Add, EcAffine, Elliptic, Mul, on_group, op, scalar_mul

print(op(GA, Add(Fraction(1, 2)), Add(Fraction(1, 3))))
print(op(GM, Mul(Fraction(2, 3)), Mul(Fraction(9, 4))))

# y^2 = x^3 + 1 and the point (2, 3), which has order 6
E = Elliptic(0, 1)
P = EcAffine(2, 3)
for n in range(7):
    print(n, scalar_mul(E, n, P))

# y^2 = x^3 + 17 has two independent points of infinite order; heights grow fast
E17 = Elliptic(0, 17)
Q = EcAffine(-2, 3)
for n in (1, 2, 4, 8):
    R = scalar_mul(E17, n, Q)
    print(n, "digits in x:", len(str(R.x.denominator)), "on curve:", on_group(E17, R))

print(op(E, P, INFINITY) == P)
