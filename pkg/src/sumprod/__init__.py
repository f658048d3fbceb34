"""Exact sum-product experiments in the 1-dimensional algebraic groups over Q."""

from .corresp import (
    CoordProj,
    Graph,
    Implicit,
    SquareShift,
    degree,
    fiber,
    image,
    is_subgroup_translate,
)
from .degen import (
    ga_degeneracy,
    gm_degeneracy,
    hypersurface_degree,
    translation_invariance_certificate,
)
from .finsets import FiniteSet, SubgroupBasis, box, doubling, image_sum, iterated, sumset
from .groups import (
    GA,
    GM,
    INFINITY,
    Add,
    Additive,
    EcAffine,
    EcInfinity,
    Elliptic,
    Mul,
    Multiplicative,
    identity,
    inverse,
    on_group,
    op,
    scalar_mul,
)
from .patterns import (
    GapSpec,
    PatternReport,
    canonical_degree,
    gap_enumerate,
    longest_ap,
    longest_gp,
    longest_square_ap,
)
from .poly import MultiPoly, parse
from .structure import (
    TorsionSet,
    VarietySpec,
    count_points,
    mult_rank,
    ruzsa_cover,
    torsion_unfold,
)

__version__ = "0.1.0"

__all__ = [
    "CoordProj",
    "Graph",
    "Implicit",
    "SquareShift",
    "degree",
    "fiber",
    "image",
    "is_subgroup_translate",
    "ga_degeneracy",
    "gm_degeneracy",
    "hypersurface_degree",
    "translation_invariance_certificate",
    "FiniteSet",
    "SubgroupBasis",
    "box",
    "doubling",
    "image_sum",
    "iterated",
    "sumset",
    "GA",
    "GM",
    "INFINITY",
    "Add",
    "Additive",
    "EcAffine",
    "EcInfinity",
    "Elliptic",
    "Mul",
    "Multiplicative",
    "identity",
    "inverse",
    "on_group",
    "op",
    "scalar_mul",
    "GapSpec",
    "PatternReport",
    "canonical_degree",
    "gap_enumerate",
    "longest_ap",
    "longest_gp",
    "longest_square_ap",
    "MultiPoly",
    "parse",
    "TorsionSet",
    "VarietySpec",
    "count_points",
    "mult_rank",
    "ruzsa_cover",
    "torsion_unfold",
]
