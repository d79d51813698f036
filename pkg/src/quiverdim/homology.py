"""Minimal projective resolutions, Ext groups and homological dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .algebra import BoundQuiverAlgebra
from .exceptions import UndeterminedError
from .linalg import Matrix, column_space, extend_to_basis, hstack, nullspace_basis, rank
from .reps import (Representation, are_isomorphic, dual, opposite_of, projective_at, restrict,
                   simple_at)


@dataclass(frozen=True)
class Dimension:
    """A homological dimension: finite, infinite, or only bounded below."""

    value: int | None
    kind: str = "finite"  # "finite" | "infinite" | "lower-bound"

    @classmethod
    def finite(cls, n: int) -> "Dimension":
        return cls(n)

    @classmethod
    def infinite(cls) -> "Dimension":
        return cls(None, "infinite")

    @classmethod
    def at_least(cls, n: int) -> "Dimension":
        return cls(n, "lower-bound")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"dimension {self} is not finite")
        return self.value

    def __str__(self):
        if self.kind == "infinite":
            return "inf"
        if self.kind == "lower-bound":
            return f">={self.value}"
        return str(self.value)

    def exceeds(self, bound: int) -> bool | None:
        """``True``/``False`` if decidable, ``None`` for a lower bound not above ``bound``."""
        if self.kind == "infinite":
            return True
        if self.kind == "lower-bound":
            return True if self.value > bound else None
        return self.value > bound


def combine_max(dims: Sequence[Dimension]) -> Dimension:
    if not dims:
        return Dimension.finite(0)
    if any(d.kind == "infinite" for d in dims):
        return Dimension.infinite()
    top = max(d.value for d in dims)
    if any(d.kind == "lower-bound" for d in dims):
        return Dimension.at_least(top)
    return Dimension.finite(top)


def add_dims(a: Dimension, b: Dimension) -> Dimension:
    if "infinite" in (a.kind, b.kind):
        return Dimension.infinite()
    if "lower-bound" in (a.kind, b.kind):
        return Dimension.at_least(a.value + b.value)
    return Dimension.finite(a.value + b.value)


def default_cutoff(a: BoundQuiverAlgebra) -> int:
    return 2 * a.n + 2


def _cache(a: BoundQuiverAlgebra, name: str) -> dict:
    c = a.__dict__.get(name)
    if c is None:
        c = a.__dict__[name] = {}
    return c


def cached_projective(a: BoundQuiverAlgebra, x: int) -> Representation:
    c = _cache(a, "_proj_cache")
    if x not in c:
        c[x] = projective_at(a, x)
    return c[x]


def top_generators(m: Representation) -> list[tuple[int, list]]:
    """Vectors spanning a complement of the radical at each vertex, as ``(vertex, vector)`` pairs."""
    a = m.algebra
    field = a.field
    gens = []
    for x in range(a.n):
        d = m.dims[x]
        if d == 0:
            continue
        images = [m.maps[i] for i in a.in_arrows[x] if m.maps[i].ncols]
        rad = column_space(hstack(field, images, d)) if images else []
        for g in extend_to_basis(field, rad, d):
            gens.append((x, g))
    return gens


@dataclass
class ProjectiveCover:
    cover: Representation
    generators: list[int]  # vertex of each indecomposable summand P_x, in order
    epi: list[Matrix]  # per-vertex matrices cover -> module
    kernel: Representation
    kernel_basis: list[list]  # per-vertex column vectors of the kernel inside the cover

    @property
    def multiplicities(self) -> list[int]:
        counts = [0] * len(self.cover.dims)
        for x in self.generators:
            counts[x] += 1
        return counts


def _sum_of_projectives(a: BoundQuiverAlgebra, gens: Sequence[int]) -> Representation:
    field = a.field
    parts = [cached_projective(a, x) for x in gens]
    dims = [sum(p.dims[v] for p in parts) for v in range(a.n)]
    maps = []
    for i, (_, s, t) in enumerate(a.arrows):
        m = Matrix.zeros(field, dims[t], dims[s])
        r = c = 0
        for p in parts:
            blk = p.maps[i]
            for k in range(blk.nrows):
                m.rows[r + k][c:c + blk.ncols] = blk.rows[k]
            r += blk.nrows
            c += blk.ncols
        maps.append(m)
    return Representation(a, dims, maps, check=False)


def _apply_path(m: Representation, path, vec):
    for arrow in path:
        vec = m.maps[arrow].apply(vec)
    return vec


def projective_cover(m: Representation) -> ProjectiveCover:
    """``P -> m`` with ``P`` the sum of ``P_x`` over a basis of the top of ``m``."""
    a = m.algebra
    field = a.field
    gens = top_generators(m)
    cover = _sum_of_projectives(a, [x for x, _ in gens])
    epi = []
    for y in range(a.n):
        cols = []
        for x, g in gens:
            for b in a.basis(x, y):
                cols.append(_apply_path(m, b, g))
        epi.append(Matrix.from_columns(field, cols, m.dims[y]))
    kbasis = [nullspace_basis(e) if e.ncols else [] for e in epi]
    kernel = restrict(cover, kbasis)
    return ProjectiveCover(cover, [x for x, _ in gens], epi, kernel, kbasis)


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> module``.

    ``generators[i]`` lists the vertex of each indecomposable summand of
    ``P_i``; ``differentials[i]`` holds per-vertex matrices of ``P_i ->
    P_{i-1}`` (``differentials[0]`` is the augmentation onto the module).
    """

    module: Representation
    generators: list[list[int]] = dc_field(default_factory=list)
    terms: list[Representation] = dc_field(default_factory=list)
    differentials: list[list[Matrix]] = dc_field(default_factory=list)
    syzygies: list[Representation] = dc_field(default_factory=list)
    syzygy_inclusions: list[list[Matrix]] = dc_field(default_factory=list)
    length: Dimension = Dimension.finite(0)
    cutoff: int = 0

    def multiplicities(self, i: int) -> list[int]:
        counts = [0] * self.module.algebra.n
        if i < len(self.generators):
            for x in self.generators[i]:
                counts[x] += 1
        return counts

    @property
    def known_terms(self) -> int:
        return len(self.generators)


def minimal_resolution(m: Representation, cutoff: int | None = None) -> Resolution:
    """Iterate projective covers until the syzygy vanishes, repeats, or ``cutoff`` terms are built."""
    a = m.algebra
    if cutoff is None:
        cutoff = default_cutoff(a)
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    cache = _cache(a, "_res_cache")
    key = (m.key(), cutoff)
    if key in cache:
        return cache[key]
    res = Resolution(m, cutoff=cutoff)
    current = m
    res.syzygies.append(m)
    if m.is_zero():
        res.length = Dimension.finite(0)
        cache[key] = res
        return res
    i = 0
    periodic = False
    while True:
        pc = projective_cover(current)
        res.generators.append(pc.generators)
        res.terms.append(pc.cover)
        if i == 0:
            res.differentials.append(pc.epi)
        else:
            incl = res.syzygy_inclusions[-1]
            res.differentials.append([k @ e for k, e in zip(incl, pc.epi)])
        res.syzygy_inclusions.append([Matrix.from_columns(a.field, kb, pc.cover.dims[v]) for v, kb in enumerate(pc.kernel_basis)])
        nxt = pc.kernel
        if nxt.is_zero():
            res.length = Dimension.finite(i)
            break
        # a syzygy isomorphic to an earlier one repeats forever; keep going
        # to the cutoff so that Ext stays computable in low degrees
        if not periodic and any(s.dims == nxt.dims and are_isomorphic(s, nxt) for s in res.syzygies[1:]):
            periodic = True
        res.syzygies.append(nxt)
        if i + 1 > cutoff:
            res.length = Dimension.infinite() if periodic else Dimension.at_least(i + 1)
            break
        current = nxt
        i += 1
    cache[key] = res
    return res


def _dual_differential(res: Resolution, i: int, n: Representation) -> Matrix:
    """Matrix of ``Hom(P_{i-1}, n) -> Hom(P_i, n)`` in the bases ``prod_g n(x_g)``."""
    a = res.module.algebra
    field = a.field
    src = res.generators[i - 1]
    tgt = res.generators[i]
    rows_total = sum(n.dims[x] for x in tgt)
    cols_total = sum(n.dims[x] for x in src)
    out = Matrix.zeros(field, rows_total, cols_total)
    d = res.differentials[i]
    row = 0
    for g, xg in enumerate(tgt):
        # d_i applied to the generator of summand g: the trivial-path column of its block
        start = sum(len(a.basis(xh, xg)) for xh in tgt[:g])
        col = d[xg].column(start)
        off = 0
        col_off = 0
        for xh in src:
            paths = a.basis(xh, xg)
            coeffs = col[off:off + len(paths)]
            off += len(paths)
            if n.dims[xh] and n.dims[xg]:
                blk = Matrix.zeros(field, n.dims[xg], n.dims[xh])
                for c, b in zip(coeffs, paths):
                    if c != 0:
                        blk = blk + n.path_map(xh, b).scale(c)
                for r in range(blk.nrows):
                    out.rows[row + r][col_off:col_off + blk.ncols] = blk.rows[r]
            col_off += n.dims[xh]
        row += n.dims[xg]
    return out


def ext_dim(m: Representation, n: Representation, i: int, cutoff: int | None = None) -> int:
    """``dim Ext^i(m, n)`` from the Hom complex of the minimal resolution of ``m``."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    res = minimal_resolution(m, cutoff)
    known = res.known_terms
    if res.length.is_finite and i > res.length.value:
        return 0
    if m.is_zero():
        return 0
    if not res.length.is_finite and i + 1 >= known:
        raise UndeterminedError(f"resolution truncated before degree {i + 1}")
    width = sum(n.dims[x] for x in res.generators[i])
    if i + 1 < known:
        k = width - rank(_dual_differential(res, i + 1, n))
    else:
        k = width
    r = rank(_dual_differential(res, i, n)) if i >= 1 else 0
    return k - r


def projd(m: Representation, cutoff: int | None = None) -> Dimension:
    return minimal_resolution(m, cutoff).length


def dual_module(m: Representation) -> Representation:
    return dual(m, opposite_of(m.algebra))


def injd(m: Representation, cutoff: int | None = None) -> Dimension:
    """Injective dimension as the projective dimension of the dual over the opposite algebra."""
    return projd(dual_module(m), cutoff)


def gldim(a: BoundQuiverAlgebra, cutoff: int | None = None) -> Dimension:
    return combine_max([projd(simple_at(a, x), cutoff) for x in range(a.n)])


def simple_dimensions(a: BoundQuiverAlgebra, cutoff: int | None = None) -> list[tuple[Dimension, Dimension]]:
    """``(projd S_x, injd S_x)`` for every vertex."""
    return [(projd(simple_at(a, x), cutoff), injd(simple_at(a, x), cutoff)) for x in range(a.n)]


# -- self-checks used by the test suite and the corpus runner ---------------


def check_complex(res: Resolution) -> bool:
    """Consecutive differentials compose to zero."""
    for i in range(1, len(res.differentials)):
        for y in range(res.module.algebra.n):
            prod = res.differentials[i - 1][y] @ res.differentials[i][y]
            if not prod.is_zero():
                return False
    return True


def check_exact(res: Resolution) -> bool:
    """Rank counting at every vertex: augmentation onto, ``rank d_{i+1} = nullity d_i``."""
    a = res.module.algebra
    if not res.differentials:
        return res.module.is_zero()
    for y in range(a.n):
        if rank(res.differentials[0][y]) != res.module.dims[y]:
            return False
        for i in range(len(res.differentials)):
            d = res.differentials[i][y]
            nullity = d.ncols - rank(d)
            if i + 1 < len(res.differentials):
                if rank(res.differentials[i + 1][y]) != nullity:
                    return False
            elif res.length.is_finite and nullity != 0:
                return False
    return True


def check_minimal(res: Resolution) -> bool:
    """No differential ``d_i`` (``i >= 1``) hits a trivial path of a summand: image inside the radical."""
    a = res.module.algebra
    for i in range(1, len(res.differentials)):
        src, tgt = res.generators[i - 1], res.generators[i]
        for g, xg in enumerate(tgt):
            start = sum(len(a.basis(xh, xg)) for xh in tgt[:g])
            col = res.differentials[i][xg].column(start)
            off = 0
            for xh in src:
                paths = a.basis(xh, xg)
                for c, b in zip(col[off:off + len(paths)], paths):
                    if not b and c != 0:
                        return False
                off += len(paths)
    return True
