"""Turn invariants and certificates into bounds, obstructions and a three-valued verdict.

A certificate carries an implied bound on ``gldim`` and on ``projd + injd``
of indecomposables, valid *if* the algebra is piecewise hereditary.  A
violated bound therefore refutes piecewise heredity.  Only certificates
whose hypotheses are verified exactly can produce obstructions; the rest
are listed as informational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import BoundQuiverAlgebra, Poset, connected_components, incidence_algebra
from .exceptions import ResourceCeilingError, UndeterminedError
from .graph import (DEFAULT_CEILING, diameter, enumerate_indecomposables, find_epsilon_certificate,
                    hom_graph, sincere_certificate)
from .homology import Dimension, add_dims, combine_max, default_cutoff, ext_dim, injd, projd, simple_dimensions
from .linalg import GF, QQ, Field, Matrix
from .reps import Representation, constant_diagram, end_ring_analysis

CONSISTENT = "consistent-with-piecewise-hereditary"
NOT_PH = "not-piecewise-hereditary"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class AnalyzeOptions:
    r_max: int = 5
    dim_bound: int = 2
    enum_field: Field = GF(2)
    cutoff: int | None = None
    targets: str = "all"
    ceiling: int = DEFAULT_CEILING


@dataclass
class Certificate:
    kind: str  # epsilon-path | diameter | sincere | incidence-connected
    params: dict
    gldim_bound: int
    sum_bound: int
    sound: bool
    component: int | None = None

    def line(self) -> str:
        p = " ".join(f"{k}={v}" for k, v in self.params.items())
        where = f"component={self.component} " if self.component is not None else ""
        status = "used" if self.sound else "informational"
        return f"{where}{self.kind} {p} gldim<={self.gldim_bound} sum<={self.sum_bound} {status}".replace("  ", " ")


@dataclass
class Obstruction:
    kind: str  # gldim-exceeds-bound | self-ext-degree>=2
    witness: dict
    component: int | None = None

    def line(self) -> str:
        where = f"component={self.component} " if self.component is not None else ""
        return where + self.kind + " " + " ".join(f"{k}={v}" for k, v in self.witness.items())


@dataclass
class BoundReport:
    description: str
    n_vertices: int
    dimension: int
    field: str
    gldim: Dimension
    simples: list = dc_field(default_factory=list)  # (label, projd, injd)
    enumeration: str = "not run"
    indecomposables: int | None = None
    diameter: float | None = None
    max_sum: Dimension | None = None
    certificates: list = dc_field(default_factory=list)
    obstructions: list = dc_field(default_factory=list)
    undetermined: list = dc_field(default_factory=list)
    components: list = dc_field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.obstructions:
            return NOT_PH
        if self.undetermined:
            return UNDETERMINED
        return CONSISTENT

    @property
    def witness(self) -> Obstruction | None:
        return self.obstructions[0] if self.obstructions else None

    def best_bound(self) -> Certificate | None:
        used = [c for c in self.certificates if c.sound]
        return min(used, key=lambda c: c.gldim_bound) if used else None

    def as_dict(self) -> dict:
        best = self.best_bound()
        out = {
            "algebra": self.description,
            "vertices": self.n_vertices,
            "dimension": self.dimension,
            "field": self.field,
            "gldim": str(self.gldim),
            "simples": [{"module": s, "projd": str(p), "injd": str(i)} for s, p, i in self.simples],
            "enumeration": self.enumeration,
            "indecomposables": self.indecomposables,
            "diameter": _fmt_diameter(self.diameter),
            "max_projd_plus_injd": None if self.max_sum is None else str(self.max_sum),
            "certificates": [{"kind": c.kind, "component": c.component, "params": c.params,
                              "gldim_bound": c.gldim_bound, "sum_bound": c.sum_bound,
                              "used": c.sound} for c in self.certificates],
            "best_bound": None if best is None else {"kind": best.kind, "gldim_bound": best.gldim_bound},
            "obstructions": [{"kind": o.kind, "component": o.component, "witness": o.witness}
                             for o in self.obstructions],
            "undetermined": list(self.undetermined),
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.line(),
        }
        return out

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [f"algebra: {d['algebra']}", f"vertices: {d['vertices']}", f"dimension: {d['dimension']}",
                 f"field: {d['field']}", f"gldim: {d['gldim']}"]
        lines += [f"{s['module']}: projd {s['projd']}, injd {s['injd']}" for s in d["simples"]]
        lines.append(f"enumeration: {d['enumeration']}")
        lines.append(f"indecomposables: {'-' if d['indecomposables'] is None else d['indecomposables']}")
        lines.append(f"diameter: {d['diameter'] or '-'}")
        lines.append(f"max projd+injd: {d['max_projd_plus_injd'] or '-'}")
        lines += [f"certificate: {c.line()}" for c in self.certificates]
        best = self.best_bound()
        lines.append(f"best bound: {'-' if best is None else f'gldim<={best.gldim_bound} ({best.kind})'}")
        lines += [f"obstruction: {o.line()}" for o in self.obstructions]
        lines += [f"undetermined: {u}" for u in self.undetermined]
        lines.append(f"verdict: {self.verdict}")
        lines.append(f"witness: {d['witness'] or '-'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def _fmt_diameter(d):
    if d is None:
        return None
    return "inf" if d == float("inf") else str(int(d))


def lift(m: Representation, target: BoundQuiverAlgebra) -> Representation | None:
    """Carry a module over a prime field to ``target`` by symmetric integer lifts.

    Returns ``None`` unless the lift satisfies the relations and has a
    provably local endomorphism ring over ``target``'s field.
    """
    src = m.algebra.field
    if src == target.field:
        return m
    if not target.field.is_rational:
        return None
    p = src.characteristic
    f = target.field
    maps = [Matrix(f, x.nrows, x.ncols, [[f(v if v <= p // 2 else v - p) for v in row] for row in x.rows], _trusted=True)
            for x in m.maps]
    try:
        lifted = Representation(target, m.dims, maps, name=m.name, check=True)
    except ValueError:
        return None
    if lifted.is_zero():
        return None
    if sum(lifted.dims) == 1:
        return lifted
    return lifted if end_ring_analysis(lifted).local is True else None


def _module_name(m: Representation, index: int | None = None) -> str:
    if m.name:
        return m.name.split("=")[0]
    dims = "".join(str(d) for d in m.dims)
    return f"Q{index}[{dims}]" if index is not None else f"[{dims}]"


def _self_ext(m: Representation, cutoff: int) -> tuple[int, int] | None | str:
    """First ``(i, dim Ext^i(m, m))`` with ``i >= 2`` and nonzero dimension; ``"?"`` if undecidable."""
    pd = projd(m, cutoff)
    top = pd.value if pd.is_finite else cutoff
    for i in range(2, top + 1):
        try:
            e = ext_dim(m, m, i, cutoff)
        except UndeterminedError:
            return "?"
        if e:
            return (i, e)
    return None if pd.is_finite else "?"


def analyze(a: BoundQuiverAlgebra, options: AnalyzeOptions = AnalyzeOptions(), description: str | None = None) -> BoundReport:
    cutoff = options.cutoff or default_cutoff(a)
    names = a.vertices
    g = _gldim(a, cutoff)
    report = BoundReport(description or _describe(a), a.n, a.dim, str(a.field), g)
    dims = simple_dimensions(a, cutoff)
    report.simples = [(f"S_{names[x]}", p, i) for x, (p, i) in enumerate(dims)]
    if not g.is_finite and g.kind == "lower-bound":
        report.undetermined.append(f"gldim only bounded below ({g})")

    # enumeration and graph certificates
    indecs: list[Representation] = []
    try:
        indecs = enumerate_indecomposables(a, options.dim_bound, options.enum_field, options.ceiling)
    except ResourceCeilingError as exc:
        report.enumeration = f"refused ({exc})"
    else:
        report.enumeration = f"exhaustive within dim bound {options.dim_bound} over {options.enum_field}"
        report.indecomposables = len(indecs)
    same_field = options.enum_field == a.field
    if indecs:
        graph = hom_graph(indecs[0].algebra, indecs, dim_bound=options.dim_bound)
        cert = find_epsilon_certificate(graph, options.r_max, options.targets)
        if cert is not None:
            report.certificates.append(Certificate(
                "epsilon-path", {"q0": graph.display(cert.source), "signs": cert.signs_str(), "r": cert.r,
                                 "mode": cert.mode},
                cert.gldim_bound, cert.sum_bound, sound=same_field and cert.mode == "simples"))
        d = diameter(graph)
        report.diameter = d
        if d != float("inf"):
            report.certificates.append(Certificate("diameter", {"d": int(d)}, int(d) + 1, int(d) + 2, sound=False))

    # sincere and incidence certificates
    lifted = [(k, x) for k, x in enumerate(lift(m, a) for m in indecs) if x is not None]
    sincere = sincere_certificate(a, [x for _, x in lifted])
    if sincere is not None:
        report.certificates.append(Certificate(
            "sincere", {"module": _module_name(sincere, next((k for k, x in lifted if x is sincere), None))},
            3, 4, sound=True))
    if a.is_incidence and a.poset.is_connected():
        report.certificates.append(Certificate("incidence-connected", {"poset": f"{len(a.poset)} elements"}, 3, 4, sound=True))

    _obstruct_gldim(report)

    # self-extensions, and the dimension sums of lifted indecomposables
    scan: list[tuple[str, Representation]] = []
    if a.is_incidence and a.n:
        scan.append(("k_X", constant_diagram(a)))
    for k, m in lifted:
        scan.append((_module_name(m, k), m))
    sums = [add_dims(p, i) for p, i in dims]
    for label, m in scan:
        sums.append(add_dims(projd(m, cutoff), injd(m, cutoff)))
        hit = _self_ext(m, cutoff)
        if hit == "?":
            report.undetermined.append(f"self-ext of {label} beyond cutoff {cutoff}")
        elif hit is not None:
            report.obstructions.append(Obstruction("self-ext-degree>=2", {"module": label, "degree": hit[0], "dimExt": hit[1]}))
    if sums:
        report.max_sum = combine_max(sums)
    return report


def _gldim(a: BoundQuiverAlgebra, cutoff: int) -> Dimension:
    return combine_max([p for p, _ in simple_dimensions(a, cutoff)])


def _obstruct_gldim(report: BoundReport) -> None:
    g = report.gldim
    if g.kind == "lower-bound":
        return
    for c in report.certificates:
        if c.sound and g.exceeds(c.gldim_bound):
            report.obstructions.append(Obstruction(
                "gldim-exceeds-bound", {"gldim": str(g), "bound": c.gldim_bound, "certificate": c.kind}))


def _describe(a: BoundQuiverAlgebra) -> str:
    if a.is_incidence:
        return f"incidence algebra of a {len(a.poset)}-element poset"
    return f"bound quiver algebra with {len(a.arrows)} arrows and {len(a.relations)} relations"


def analyze_components(p: Poset, options: AnalyzeOptions = AnalyzeOptions(), field: Field = QQ) -> BoundReport:
    """Analyze each connected component separately and merge: maxima for bounds, any obstruction wins."""
    comps = connected_components(p)
    parts = [analyze(incidence_algebra(c, field), options) for c in comps]
    total_dim = sum(r.dimension for r in parts)
    merged = BoundReport(f"incidence algebra of a {len(p)}-element poset ({len(comps)} components)",
                         len(p), total_dim, str(field), combine_max([r.gldim for r in parts]))
    merged.components = parts
    counts = [r.indecomposables for r in parts]
    for k, r in enumerate(parts):
        merged.simples += r.simples
        for c in r.certificates:
            merged.certificates.append(Certificate(c.kind, c.params, c.gldim_bound, c.sum_bound, c.sound, k))
        for o in r.obstructions:
            merged.obstructions.append(Obstruction(o.kind, o.witness, k))
        merged.undetermined += [f"component {k}: {u}" for u in r.undetermined]
    if parts:
        merged.enumeration = "; ".join(f"component {k}: {r.enumeration}" for k, r in enumerate(parts))
        merged.indecomposables = None if None in counts else sum(counts)
        sums = [r.max_sum for r in parts if r.max_sum is not None]
        merged.max_sum = combine_max(sums) if sums else None
        # the shadow graph of a direct sum is disconnected, so only componentwise diameters mean anything
        merged.diameter = float("inf") if len(parts) > 1 else parts[0].diameter
    else:
        merged.enumeration = "empty poset"
        merged.indecomposables = 0
    return merged


def componentwise_bounds(report: BoundReport) -> list[int | None]:
    """Best sound gldim bound in each component (``None`` where there is none)."""
    out = []
    for r in report.components:
        best = r.best_bound()
        out.append(None if best is None else best.gldim_bound)
    return out
