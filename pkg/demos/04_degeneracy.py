"""
Degenerate polynomials
======================

A polynomial is G_a-degenerate when it is constant along some direction, and
G_m-degenerate when its exponent vectors do not span.
"""

from sumprod import (
    ga_degeneracy,
    gm_degeneracy,
    hypersurface_degree,
    parse,
    translation_invariance_certificate,
)

for text in ["x*y + y*z + z*x", "x2*x3 - x1 + 1", "x^2 - 2*x*y + y^2 + z", "x1*x2"]:
    P = parse(text)
    v = ga_degeneracy(P)
    line = f"{text:24s} G_a: {None if v is None else [str(c) for c in v]}  G_m degenerate: {gm_degeneracy(P)}  degree: {hypersurface_degree(P)}"
    if v is not None:
        line += f"  certificate: {translation_invariance_certificate(P, v)}"
    print(line)
