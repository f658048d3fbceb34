"""Experiment harness: JSON configs in, reproducible report rows out.

Each ``run_*`` function takes a parsed config dict and returns a list of rows.
Size sweeps are explicit lists (``"sizes": [3, 4, 5]``). Measured exponents
are reported as observations; nothing is compared against the non-effective
constants of the underlying theorems.

Set builders (``"set"`` in a config), each evaluated at a size ``n``:

=========  ==============================================================
ap         ``start + i*step`` for ``0 <= i < n``
gp         ``start * ratio^i`` for ``0 <= i < n`` (``-n <= i <= n`` if symmetric)
box        ``sum n_i g_i`` with ``|n_i| <= n`` over ``generators``
gap        ``base + sum l_i P_i`` with ``0 <= l_i < n``
explicit   the listed ``elements`` (no size parameter)
=========  ==============================================================

Every builder also accepts ``"extra"``: elements added to the set.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .arith import as_rational, rational_str
from .corresp import CoordProj, correspondence_from_json, image, is_subgroup_translate
from .degen import ga_degeneracy, gm_degeneracy, hypersurface_degree
from .errors import (
    BudgetExceeded,
    ConfigError,
    DegenerateInput,
    EmptySet,
    OffCurveGenerator,
    TranslateCorrespondence,
    Unsupported,
)
from .finsets import FiniteSet, SubgroupBasis, box, doubling, image_sum, iterated
from .groups import (
    GA,
    Additive,
    Elliptic,
    Multiplicative,
    element_from_json,
    group_from_json,
    value,
)
from .patterns import GapSpec, gap_enumerate, longest_ap, longest_gp, longest_square_ap
from .poly import as_poly
from .structure import DEFAULT_TUPLE_BUDGET, VarietySpec, count_points

EXPERIMENTS = ("bremner", "expansion", "eszabo", "elekes_ronyai", "patterns", "degeneracy")


@dataclass
class ReportRow:
    experiment: str
    label: str
    set_size: int
    doubling: Fraction | None
    result: int
    exponent: float | None = None
    runtime_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.exponent is None and self.set_size >= 2 and self.result >= 1:
            self.exponent = math.log(self.result) / math.log(self.set_size)
        if self.set_size < 2:
            self.exponent = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["doubling"] = None if self.doubling is None else rational_str(self.doubling)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ReportRow":
        dbl = d.get("doubling")
        exp = d.get("exponent")
        extra = d.get("extra") or {}
        if isinstance(extra, str):
            extra = json.loads(extra)
        return cls(
            experiment=d["experiment"],
            label=d["label"],
            set_size=int(d["set_size"]),
            doubling=None if dbl in (None, "") else Fraction(dbl),
            result=int(d["result"]),
            exponent=None if exp in (None, "") else float(exp),
            runtime_ms=float(d.get("runtime_ms") or 0.0),
            extra=extra,
        )


CSV_FIELDS = [
    "experiment",
    "label",
    "set_size",
    "doubling",
    "result",
    "exponent",
    "runtime_ms",
    "extra",
]


def rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = r.to_dict()
        d["exponent"] = "" if r.exponent is None else repr(r.exponent)
        d["doubling"] = d["doubling"] or ""
        d["extra"] = json.dumps(r.extra, sort_keys=True)
        w.writerow(d)
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ReportRow]:
    return [ReportRow.from_dict(d) for d in csv.DictReader(io.StringIO(text))]


def rows_to_json(rows: list[ReportRow]) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2, sort_keys=True)


def rows_from_json(text: str) -> list[ReportRow]:
    return [ReportRow.from_dict(d) for d in json.loads(text)]


# -- config helpers ------------------------------------------------------------


def _require(config: dict, key: str):
    if key not in config:
        raise ConfigError(f"config is missing {key!r}")
    return config[key]


def build_set(group, spec: dict, n: int | None = None) -> FiniteSet:
    kind = spec.get("kind", "explicit")
    if kind == "explicit":
        elems = list(_require(spec, "elements"))
    elif n is None:
        raise ConfigError(f"set builder {kind!r} needs a size from 'sizes'")
    elif kind == "ap":
        start, step = as_rational(spec.get("start", "0")), as_rational(spec.get("step", "1"))
        elems = [start + i * step for i in range(n)]
    elif kind == "gp":
        start, ratio = as_rational(spec.get("start", "1")), as_rational(spec.get("ratio", "2"))
        rng = range(-n, n + 1) if spec.get("symmetric") else range(n)
        elems = [start * ratio**i for i in rng]
    elif kind == "box":
        basis = SubgroupBasis(group, tuple(spec.get("generators", ())))
        return _with_extra(group, box(basis, n, spec.get("base")), spec)
    elif kind == "gap":
        steps = list(_require(spec, "steps"))
        gap = GapSpec(group, spec.get("base", group.identity()), steps, [n] * len(steps))
        return _with_extra(group, gap_enumerate(gap)[0], spec)
    else:
        raise ConfigError(f"unknown set builder {kind!r}")
    return _with_extra(group, FiniteSet(group, elems), spec)


def _with_extra(group, A: FiniteSet, spec: dict) -> FiniteSet:
    extra = spec.get("extra")
    return A.union(FiniteSet(group, extra)) if extra else A


def _sizes(config: dict) -> list:
    sizes = config.get("sizes")
    if sizes is None:
        return [None]
    if not isinstance(sizes, list) or not all(isinstance(s, int) and s >= 1 for s in sizes):
        raise ConfigError("'sizes' must be an explicit list of positive integers")
    return sizes


def _budget(config: dict) -> int:
    return int(config.get("budgets", {}).get("tuples", DEFAULT_TUPLE_BUDGET))


def _timer(config: dict) -> Callable[[], float]:
    if config.get("timing", True):
        t0 = time.perf_counter()
        return lambda: round((time.perf_counter() - t0) * 1000, 3)
    return lambda: 0.0


# -- experiments -----------------------------------------------------------------


class PointCache:
    """Boxes of curve points persisted as JSON, keyed by curve, generators and ``L``.

    Cached points are re-checked against the curve when loaded.
    """

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path else None
        self.data: dict = {}
        if self.path is not None and self.path.exists():
            try:
                self.data = json.loads(self.path.read_text())
            except json.JSONDecodeError as exc:
                raise ConfigError(f"unreadable point cache {self.path}: {exc}") from exc
        self.dirty = False

    @staticmethod
    def key(E: Elliptic, gens, L: int) -> str:
        parts = [rational_str(E.a), rational_str(E.b), str(L)]
        parts += [f"{rational_str(p.x)},{rational_str(p.y)}" for p in gens]
        return "|".join(parts)

    def box(self, basis: SubgroupBasis, L: int) -> FiniteSet:
        E = basis.group
        k = self.key(E, basis.generators, L)
        if self.path is not None and k in self.data:
            return FiniteSet(E, [element_from_json(E, p) for p in self.data[k]])
        pts = box(basis, L)
        if self.path is not None:
            self.data[k] = pts.to_json()
            self.dirty = True
        return pts

    def save(self) -> None:
        if self.path is not None and self.dirty:
            self.path.write_text(json.dumps(self.data, sort_keys=True))
            self.dirty = False


def run_bremner(config: dict) -> list[ReportRow]:
    """Pattern lengths in x- and y-coordinates of a box of rational points.

    ``"point_cache": path`` stores the point boxes between runs.
    """
    curve = _require(config, "curve")
    E = Elliptic(as_rational(curve["a"]), as_rational(curve["b"]))
    gens = []
    for raw in config.get("generators", []):
        p = E.element(raw)
        if not E.contains(p):
            raise OffCurveGenerator(f"generator {raw!r} is not on {E}")
        gens.append(p)
    basis = SubgroupBasis(E, tuple(gens))
    detectors = {"AP": longest_ap, "GP": longest_gp, "SquareAP": longest_square_ap}
    cache = PointCache(config.get("point_cache"))
    rows = []
    for L in config.get("sizes", config.get("L", [1])):
        clock = _timer(config)
        points = cache.box(basis, L) if gens else FiniteSet(E, [E.identity()])
        K = doubling(points) if config.get("compute_doubling", True) else None
        for axis in ("x", "y"):
            coords = [value(c) for c in image(CoordProj(E, GA, axis), points)]
            for kind, detect in detectors.items():
                rep = detect(coords) if coords else None
                length = rep.length if rep else 0
                witness = [rational_str(w) for w in rep.witness] if rep and rep.witness else None
                rows.append(
                    ReportRow(
                        "bremner",
                        f"L={L} {axis} {kind}",
                        len(points),
                        K,
                        length,
                        runtime_ms=clock(),
                        extra={
                            "L": L,
                            "axis": axis,
                            "pattern": kind,
                            "coordinate_count": len(coords),
                            "rank_bound": len(gens),
                            "witness": witness,
                        },
                    )
                )
    cache.save()
    return rows


def _guard_translates(Cs) -> None:
    for C in Cs:
        try:
            if is_subgroup_translate(C):
                raise TranslateCorrespondence(f"{C} is a translate of an algebraic subgroup")
        except Unsupported:
            pass


def run_expansion(config: dict, workers: int = 1) -> list[ReportRow]:
    """``|gA|`` against ``|C1(A) + ... + Cg(A)|`` over a size sweep."""
    group = group_from_json(_require(config, "group"))
    Cs = [correspondence_from_json(c) for c in _require(config, "correspondences")]
    g = int(config.get("g", len(Cs)))
    if len(Cs) == 1 and g > 1:
        Cs = Cs * g
    if len(Cs) != g:
        raise ConfigError(f"need 1 or g={g} correspondences, got {len(Cs)}")
    _guard_translates(Cs)
    spec = _require(config, "set")
    rows = []
    for n in _sizes(config):
        clock = _timer(config)
        A = build_set(group, spec, n)
        gA = iterated(A, g, workers)
        S = image_sum(Cs, A, strict=bool(config.get("strict_fibers", False)))
        K = doubling(A, workers)
        extra = {"g": g, "gA": len(gA), "size_param": n}
        extra["gA_exponent"] = (math.log(len(gA)) / math.log(len(A))) if len(A) >= 2 else None
        rows.append(
            ReportRow("expansion", f"n={n}", len(A), K, len(S), runtime_ms=clock(), extra=extra)
        )
    return rows


def _variety(config: dict, group) -> VarietySpec:
    v = _require(config, "variety")
    eqs = [as_poly(e) for e in _require(v, "equations")]
    g = int(v.get("num_vars", max(e.num_vars for e in eqs)))
    return VarietySpec(g, tuple(as_poly(e, g) for e in eqs), v.get("dim"), group)


def run_eszabo(config: dict, workers: int = 1) -> list[ReportRow]:
    """``(K, |V ∩ A^g|, |A|^(dim-1))`` over a size sweep; ``dim`` is declared."""
    group = group_from_json(_require(config, "group"))
    V = _variety(config, group)
    if V.declared_dim is None:
        raise ConfigError("eszabo needs a declared 'dim' for the variety")
    spec = _require(config, "set")
    rows = []
    for n in _sizes(config):
        clock = _timer(config)
        A = build_set(group, spec, n)
        count = count_points(V, A, _budget(config), workers)
        K = doubling(A, workers)
        shape = len(A) ** (V.declared_dim - 1) if V.declared_dim >= 1 else Fraction(1, len(A))
        rows.append(
            ReportRow(
                "eszabo",
                f"n={n}",
                len(A),
                K,
                count,
                runtime_ms=clock(),
                extra={
                    "declared_dim": V.declared_dim,
                    "declared_bound_shape": str(shape),
                    "size_param": n,
                },
            )
        )
    return rows


def run_elekes_ronyai(config: dict, workers: int = 1) -> list[ReportRow]:
    """``|P(A, ..., A)|`` against ``|A|^g / K`` over a size sweep."""
    group = group_from_json(_require(config, "group"))
    P = as_poly(_require(config, "polynomial"))
    if isinstance(group, Multiplicative) and gm_degeneracy(P):
        raise DegenerateInput(f"{P} is degenerate with respect to G_m^{P.num_vars}")
    if isinstance(group, Additive) and ga_degeneracy(P) is not None:
        raise DegenerateInput(f"{P} is degenerate with respect to G_a^{P.num_vars}")
    if isinstance(group, Elliptic):
        raise ConfigError("elekes_ronyai needs group Ga or Gm")
    spec = _require(config, "set")
    rows = []
    for n in _sizes(config):
        clock = _timer(config)
        A = build_set(group, spec, n)
        g = P.num_vars
        if len(A) ** g > _budget(config):
            raise BudgetExceeded(f"|A|^g = {len(A) ** g} exceeds the tuple budget")
        vals = [value(a) for a in A]
        image = {P.evaluate(pt) for pt in itertools.product(vals, repeat=g)}
        K = doubling(A, workers)
        shape = Fraction(len(A) ** g) / K
        rows.append(
            ReportRow(
                "elekes_ronyai",
                f"n={n}",
                len(A),
                K,
                len(image),
                runtime_ms=clock(),
                extra={"g": g, "shape": rational_str(shape), "size_param": n},
            )
        )
    return rows


def run_patterns(config) -> list[dict]:
    """PatternReports (as dicts) for a list of rationals."""
    if isinstance(config, list):
        elems, kinds = config, ("AP", "GP", "SquareAP")
    else:
        elems = _require(config, "elements")
        kinds = tuple(config.get("kinds", ("AP", "GP", "SquareAP")))
    detectors = {"AP": longest_ap, "GP": longest_gp, "SquareAP": longest_square_ap}
    vals = [as_rational(x) for x in elems]
    if not vals:
        raise EmptySet("patterns needs a nonempty list")
    return [detectors[k](vals).to_json() for k in kinds]


def run_degeneracy(config: dict) -> list[dict]:
    out = []
    for text in _require(config, "polynomials"):
        P = as_poly(text)
        v = ga_degeneracy(P) if not P.is_constant() else None
        out.append(
            {
                "polynomial": text,
                "num_vars": P.num_vars,
                "ga_vector": None if v is None else [rational_str(c) for c in v],
                "ga_degenerate": v is not None,
                "gm_degenerate": gm_degeneracy(P),
                "hypersurface_degree": hypersurface_degree(P),
            }
        )
    return out


RUNNERS = {
    "bremner": lambda c, w: run_bremner(c),
    "expansion": run_expansion,
    "eszabo": run_eszabo,
    "elekes_ronyai": run_elekes_ronyai,
    "patterns": lambda c, w: run_patterns(c),
    "degeneracy": lambda c, w: run_degeneracy(c),
}


def run(experiment: str, config, workers: int = 1):
    if experiment not in RUNNERS:
        raise ConfigError(f"unknown experiment {experiment!r}")
    if isinstance(config, dict) and config.get("experiment", experiment) != experiment:
        raise ConfigError(f"config is for {config['experiment']!r}, not {experiment!r}")
    return RUNNERS[experiment](config, workers)
