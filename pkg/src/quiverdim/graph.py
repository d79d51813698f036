"""Bounded enumeration of indecomposables, the Hom-graph and its connectivity certificates.

Enumeration works vertex by vertex in topological order.  At a vertex
``v`` the relations ending at ``v`` are linear in the joint incoming map
``J_v`` (all arrows into ``v`` side by side): every row of ``J_v`` must lie
in a subspace ``W``.  Changing basis at ``v`` acts on ``J_v`` from the left
and only later on the outgoing maps, so up to isomorphism ``J_v`` is
determined by its row space, a subspace of ``W`` that we enumerate in RREF.
Sources keep their full basis freedom; the resulting duplicates are removed
by the isomorphism check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Iterator, Sequence

from .algebra import BoundQuiverAlgebra
from .exceptions import InputError, ResourceCeilingError
from .linalg import GF, Field, Matrix, _rref_inplace, nullspace_basis, rank
from .reps import (Representation, _find_split, _indecomposable_iso, constant_diagram, hom_basis,
                   hom_dim, injective_at, is_sincere, projective_at, simple_at)

DEFAULT_CEILING = 2_000_000
ESTIMATE_PROBES = 24
ESTIMATE_SEED = 7


def _gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _rref_subspaces(field: Field, k: int, r: int) -> Iterator[list[list[int]]]:
    """All ``r``-dimensional subspaces of ``field**k`` as ``r x k`` RREF row lists."""
    elems = list(field.elements())
    for pivots in combinations(range(k), r):
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, k) if j not in pivots]
        for values in product(elems, repeat=len(free)):
            rows = [[0] * k for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), x in zip(free, values):
                rows[i][j] = x
            yield rows


def _random_subspace(field: Field, basis: list[list[int]], r: int, rng: random.Random) -> list[list[int]]:
    """Uniformly random ``r``-dimensional subspace of ``span(basis)``, as ambient RREF rows."""
    p = field.characteristic
    k = len(basis)
    n = len(basis[0]) if basis else 0
    while True:
        coef = [[rng.randrange(p) for _ in range(k)] for _ in range(r)]
        rows = [[sum(c * b[j] for c, b in zip(cr, basis)) % p for j in range(n)] for cr in coef]
        piv = _rref_inplace(rows, n, field)
        if len(piv) == r:
            return rows[:r]


class _Layout:
    """Static data for one dimension vector: which vertices are free, joint-map column blocks, relations."""

    def __init__(self, a: BoundQuiverAlgebra, dims: Sequence[int], order: Sequence[int]):
        self.a = a
        self.dims = tuple(dims)
        support = [v for v in order if dims[v]]
        self.support = set(support)
        self.single = len(support) == 1
        self.steps = []  # vertices with at least one incoming arrow from the support
        self.blocks = {}
        for v in support:
            ins = [i for i in a.in_arrows[v] if dims[a.arrows[i][1]]]
            if not ins:
                continue
            off = 0
            blk = {}
            for i in ins:
                s = a.arrows[i][1]
                blk[i] = (off, off + dims[s])
                off += dims[s]
            self.blocks[v] = (blk, off)
            self.steps.append(v)
        self.outs = {v: [i for i in a.out_arrows[v] if dims[a.arrows[i][2]]] for v in support}
        # vertex becomes checkable once its last out-neighbour in the support is assigned
        pos = {v: k for k, v in enumerate(self.steps)}
        self.check_after = {k: [] for k in range(-1, len(self.steps))}
        for v in support:
            targets = [a.arrows[i][2] for i in self.outs[v]]
            last = max([pos[t] for t in targets] + [pos.get(v, -1)])
            self.check_after[last].append(v)
        self.rels = {v: [] for v in self.steps}
        for s, t, terms in a._rels:
            if t in self.rels and dims[s]:
                self.rels[t].append((s, terms))


def _constraint_space(layout: _Layout, maps: list, v: int) -> list[list[int]]:
    """Basis of the row vectors allowed in ``J_v`` given the maps already fixed."""
    a = layout.a
    field = a.field
    p = field.characteristic
    blk, width = layout.blocks[v]
    cols = []  # columns of C, each of length ``width``
    dims = layout.dims
    for s, terms in layout.rels[v]:
        # C_rel = sum over terms of c * M(prefix) placed in the block of the last arrow
        block = [[0] * dims[s] for _ in range(width)]
        for c, path in terms:
            last = path[-1]
            if last not in blk:
                continue
            pre = Matrix.identity(field, dims[s])
            for arrow in path[:-1]:
                pre = maps[arrow] @ pre
            lo, _ = blk[last]
            for r in range(pre.nrows):
                row = pre.rows[r]
                target = block[lo + r]
                for j in range(dims[s]):
                    if row[j]:
                        target[j] = (target[j] + c * row[j]) % p
        for j in range(dims[s]):
            cols.append([block[i][j] for i in range(width)])
    if not cols:
        return [[1 if i == j else 0 for i in range(width)] for j in range(width)]
    # rows r with r . C == 0  <=>  C^T r == 0
    ct = Matrix(field, len(cols), width, cols, _trusted=True)
    return nullspace_basis(ct)


def _out_ok(layout: _Layout, maps: list, v: int) -> bool:
    """Necessary condition for indecomposability (unless simple): ker(out_v) inside im(in_v)."""
    if layout.single:
        return True
    a = layout.a
    field = a.field
    d = layout.dims[v]
    outs = layout.outs[v]
    if outs:
        stacked = []
        for i in outs:
            stacked.extend(maps[i].rows)
        ker = nullspace_basis(Matrix(field, len(stacked), d, stacked, _trusted=True))
    else:
        ker = [[1 if i == j else 0 for i in range(d)] for j in range(d)]
    if not ker:
        return True
    if v in layout.blocks:
        ins = [maps[i] for i in layout.blocks[v][0]]
        img_rank = rank(Matrix(field, d, sum(m.ncols for m in ins), [sum((m.rows[r] for m in ins), []) for r in range(d)], _trusted=True))
    else:
        img_rank = 0
    # in RREF the image of J_v is spanned by the first rank(J_v) coordinates
    return all(all(x == 0 for x in vec[img_rank:]) for vec in ker)


def _choices(layout: _Layout, maps: list, v: int):
    field = layout.a.field
    d = layout.dims[v]
    W = _constraint_space(layout, maps, v)
    ranks = [d] if layout.is_sink(v) else range(min(d, len(W)) + 1)
    return W, [r for r in ranks if r <= len(W)]


def _is_sink(self, v):
    return not self.single and not self.outs[v]


_Layout.is_sink = _is_sink


def _set_joint(layout: _Layout, maps: list, v: int, rows: list[list[int]]):
    a = layout.a
    field = a.field
    d = layout.dims[v]
    blk, width = layout.blocks[v]
    full = rows + [[0] * width for _ in range(d - len(rows))]
    for i, (lo, hi) in blk.items():
        maps[i] = Matrix(field, d, hi - lo, [r[lo:hi] for r in full], _trusted=True)


def _row_space_candidates(field: Field, W: list[list[int]], r: int) -> Iterator[list[list[int]]]:
    n = len(W[0]) if W else 0
    p = field.characteristic
    for coef in _rref_subspaces(field, len(W), r):
        rows = [[sum(c * w[j] for c, w in zip(cr, W)) % p for j in range(n)] for cr in coef]
        _rref_inplace(rows, n, field)
        yield rows


def _zero_maps(a: BoundQuiverAlgebra, dims):
    return [Matrix.zeros(a.field, dims[t], dims[s]) for _, s, t in a.arrows]


def _walk(layout: _Layout, budget: list) -> Iterator[list]:
    """Depth-first enumeration of canonical arrow-map assignments passing the pruning checks."""
    a = layout.a
    maps = _zero_maps(a, layout.dims)
    for v in layout.check_after[-1]:
        if not _out_ok(layout, maps, v):
            return

    def rec(k):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceCeilingError("enumeration node budget exhausted")
        if k == len(layout.steps):
            yield list(maps)
            return
        v = layout.steps[k]
        W, ranks = _choices(layout, maps, v)
        for r in ranks:
            for rows in _row_space_candidates(a.field, W, r):
                _set_joint(layout, maps, v, rows)
                if all(_out_ok(layout, maps, u) for u in layout.check_after[k]):
                    yield from rec(k + 1)

    yield from rec(0)


def _estimate_layout(layout: _Layout, rng: random.Random, probes: int) -> float:
    """Knuth's random-probe estimate of the number of search-tree nodes."""
    a = layout.a
    field = a.field
    q = field.characteristic
    total = 0.0
    for _ in range(probes):
        maps = _zero_maps(a, layout.dims)
        weight = 1.0
        nodes = 1.0
        for k, v in enumerate(layout.steps):
            W, ranks = _choices(layout, maps, v)
            counts = [_gaussian_binomial(len(W), r, q) for r in ranks]
            branching = sum(counts)
            if branching == 0:
                break
            weight *= branching
            nodes += weight
            pick = rng.randrange(branching)
            for r, c in zip(ranks, counts):
                if pick < c:
                    break
                pick -= c
            rows = _random_subspace(field, W, r, rng) if r else []
            _set_joint(layout, maps, v, rows)
            if not all(_out_ok(layout, maps, u) for u in layout.check_after[k]):
                break
        total += nodes
    return total / probes


def _free_count(layout: _Layout) -> int:
    """Upper bound on tree leaves ignoring relations and pruning."""
    q = layout.a.field.characteristic
    count = 1
    for v in layout.steps:
        width = layout.blocks[v][1]
        d = layout.dims[v]
        ranks = [d] if layout.is_sink(v) else range(d + 1)
        count *= sum(_gaussian_binomial(width, r, q) for r in ranks)
    return count


def _support_connected(a: BoundQuiverAlgebra, dims) -> bool:
    support = [v for v, d in enumerate(dims) if d]
    if not support:
        return False
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        v = stack.pop()
        for i in a.out_arrows[v] + a.in_arrows[v]:
            _, s, t = a.arrows[i]
            w = t if s == v else s
            if dims[w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(support)


def _connected_supports(a: BoundQuiverAlgebra) -> Iterator[frozenset[int]]:
    """Each connected vertex set of the underlying graph exactly once (ESU-style extension)."""
    nbrs = [set() for _ in range(a.n)]
    for _, s, t in a.arrows:
        if s != t:
            nbrs[s].add(t)
            nbrs[t].add(s)

    def extend(sub, border, ext, root):
        yield sub
        ext = set(ext)
        while ext:
            w = ext.pop()
            fresh = {u for u in nbrs[w] if u > root and u not in sub and u not in border}
            yield from extend(sub | {w}, border | nbrs[w], ext | fresh, root)

    for v in range(a.n):
        start = {u for u in nbrs[v] if u > v}
        yield from extend(frozenset([v]), nbrs[v] | {v}, start, v)


def dimension_vectors(a: BoundQuiverAlgebra, dim_bound: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """Nonzero dimension vectors with entries ``<= dim_bound`` and connected support, in output order.

    Raises :class:`ResourceCeilingError` as soon as more than ``limit``
    vectors are known to exist.
    """
    vecs = []
    count = 0
    for sub in _connected_supports(a):
        count += dim_bound ** len(sub)
        if limit is not None and count > limit:
            raise ResourceCeilingError(f"more than {limit} dimension vectors within bound {dim_bound}", count)
        verts = sorted(sub)
        for values in product(range(1, dim_bound + 1), repeat=len(verts)):
            d = [0] * a.n
            for v, x in zip(verts, values):
                d[v] = x
            vecs.append(tuple(d))
    vecs.sort(key=lambda d: (sum(d), d))
    return vecs


def search_space_estimate(a: BoundQuiverAlgebra, dim_bound: int, field: Field | None = None,
                          exact_below: int = 4096, stop_above: float = math.inf,
                          vectors: Sequence[tuple[int, ...]] | None = None) -> float:
    """Estimated number of search-tree nodes for :func:`enumerate_indecomposables`.

    Returns early with the partial sum once it passes ``stop_above``.
    """
    ap = a.over(field) if field is not None else a
    if vectors is None:
        limit = None if stop_above == math.inf else int(stop_above)
        try:
            vectors = dimension_vectors(ap, dim_bound, limit)
        except ResourceCeilingError as exc:
            return float(exc.estimate)
    order = ap.topological_vertices()
    q = ap.field.characteristic
    rng = random.Random(ESTIMATE_SEED)
    total = 0.0
    for d in vectors:
        if order is None:
            total += q ** sum(d[s] * d[t] for _, s, t in ap.arrows)
        else:
            layout = _Layout(ap, d, order)
            free = _free_count(layout)
            total += free if free <= exact_below else _estimate_layout(layout, rng, ESTIMATE_PROBES)
        if total > stop_above:
            break
    return total


def _candidates_for(a: BoundQuiverAlgebra, dims, budget) -> Iterator[list]:
    order = a.topological_vertices()
    if order is not None:
        yield from _walk(_Layout(a, dims, order), budget)
        return
    # oriented cycles: plain product over all arrow matrices
    field = a.field
    shapes = [(dims[t], dims[s]) for _, s, t in a.arrows]
    for values in product(field.elements(), repeat=sum(r * c for r, c in shapes)):
        budget[0] -= 1
        if budget[0] < 0:
            raise ResourceCeilingError("enumeration node budget exhausted")
        maps = []
        k = 0
        for r, c in shapes:
            maps.append(Matrix(field, r, c, [list(values[k + i * c:k + (i + 1) * c]) for i in range(r)], _trusted=True))
            k += r * c
        yield maps


def _satisfies_relations(a: BoundQuiverAlgebra, dims, maps) -> bool:
    for s, t, terms in a._rels:
        total = Matrix.zeros(a.field, dims[t], dims[s])
        for c, path in terms:
            m = Matrix.identity(a.field, dims[s])
            for arrow in path:
                m = maps[arrow] @ m
            total = total + m.scale(c)
        if not total.is_zero():
            return False
    return True


def fingerprint(m: Representation) -> tuple:
    """Cheap isomorphism invariant: dims, top and socle dims, and arrow ranks."""
    a = m.algebra
    field = a.field
    top, soc = [], []
    for v in range(a.n):
        d = m.dims[v]
        ins = [m.maps[i] for i in a.in_arrows[v] if m.maps[i].ncols]
        if d and ins:
            top.append(d - rank(Matrix(field, d, sum(x.ncols for x in ins), [sum((x.rows[r] for x in ins), []) for r in range(d)], _trusted=True)))
        else:
            top.append(d)
        outs = [m.maps[i] for i in a.out_arrows[v] if m.maps[i].nrows]
        if d and outs:
            stacked = [row for x in outs for row in x.rows]
            soc.append(d - rank(Matrix(field, len(stacked), d, stacked, _trusted=True)))
        else:
            soc.append(d)
    return (m.dims, tuple(top), tuple(soc), tuple(rank(x) for x in m.maps))


def enumerate_indecomposables(a: BoundQuiverAlgebra, dim_bound: int = 2, field: Field | None = None,
                              ceiling: int = DEFAULT_CEILING,
                              vectors: Sequence[Sequence[int]] | None = None) -> list[Representation]:
    """All indecomposables with every vertex dimension ``<= dim_bound``, up to isomorphism.

    Works over a prime field (default GF(2)); the result lives over
    ``a.over(field)`` and is sorted by total dimension, then dimension
    vector.  ``vectors`` restricts the search to the given dimension
    vectors (``dim_bound`` is then ignored).  Raises
    :class:`ResourceCeilingError` if the estimated search exceeds
    ``ceiling`` nodes.
    """
    field = field or GF(2)
    if field.is_rational:
        raise InputError("enumeration needs a prime field")
    ap = a.over(field)
    if vectors is None:
        if dim_bound < 1:
            raise ValueError("dim_bound must be >= 1")
        key = (dim_bound, ceiling)
        cache = ap.__dict__.setdefault("_indec_cache", {})
        if key in cache:
            return list(cache[key])
        try:
            vecs = dimension_vectors(ap, dim_bound, ceiling)
        except ResourceCeilingError as exc:
            raise ResourceCeilingError(f"{exc}; try a smaller dim bound", exc.estimate) from None
    else:
        key = None
        vecs = sorted({tuple(v) for v in vectors if any(v)}, key=lambda d: (sum(d), d))
        if any(len(v) != ap.n or min(v) < 0 for v in vecs):
            raise InputError("bad dimension vector")
        vecs = [v for v in vecs if _support_connected(ap, v)]
    estimate = search_space_estimate(ap, dim_bound, stop_above=ceiling, vectors=vecs)
    if estimate > ceiling:
        raise ResourceCeilingError(
            f"estimated search space {estimate:.3g} nodes exceeds ceiling {ceiling}; try a smaller dim bound",
            estimate)
    budget = [4 * ceiling]
    cyclic = ap.topological_vertices() is None
    found: list[Representation] = []
    buckets: dict[tuple, list[Representation]] = {}
    for dims in vecs:
        for maps in _candidates_for(ap, dims, budget):
            if cyclic and not _satisfies_relations(ap, dims, maps):
                continue
            m = Representation(ap, dims, maps, check=False)
            fp = fingerprint(m)
            bucket = buckets.setdefault(fp, [])
            if any(_indecomposable_iso(m, other) for other in bucket):
                continue
            if sum(dims) > 1 and _find_split(m, hom_basis(m, m)) is not None:
                continue
            bucket.append(m)
            found.append(m)
    found.sort(key=lambda m: (m.total_dim, m.dims))
    label_modules(found)
    if key is not None:
        cache[key] = list(found)
    return found


def label_modules(mods: Sequence[Representation]) -> None:
    """Name each module after the simple/projective/injective it is isomorphic to, if any."""
    if not mods:
        return
    a = mods[0].algebra
    standards = []
    for x in range(a.n):
        standards.append((f"S_{a.vertices[x]}", simple_at(a, x)))
    for x in range(a.n):
        standards.append((f"P_{a.vertices[x]}", projective_at(a, x)))
    for x in range(a.n):
        standards.append((f"I_{a.vertices[x]}", injective_at(a, x)))
    for m in mods:
        labels = [name for name, s in standards if s.dims == m.dims and _indecomposable_iso(m, s)]
        m.name = "=".join(labels) if labels else None


def labels_of(m: Representation) -> list[str]:
    return m.name.split("=") if m.name else []


def random_module(a: BoundQuiverAlgebra, dim_bound: int, rng: random.Random) -> Representation:
    """Pseudo-random module with dims ``<= dim_bound``, sampled layer by layer over a prime field."""
    order = a.topological_vertices()
    if order is None:
        raise InputError("random modules need an acyclic quiver")
    field = a.field
    p = field.characteristic
    while True:
        dims = tuple(rng.randint(0, dim_bound) for _ in range(a.n))
        if any(dims):
            break
    layout = _Layout(a, dims, order)
    layout.single = True  # no pruning: any module is fine
    maps = _zero_maps(a, dims)
    for v in layout.steps:
        W = _constraint_space(layout, maps, v)
        width = layout.blocks[v][1]
        rows = []
        for _ in range(dims[v]):
            coef = [rng.randrange(p) for _ in W]
            rows.append([sum(c * w[j] for c, w in zip(coef, W)) % p for j in range(width)])
        blk = layout.blocks[v][0]
        for i, (lo, hi) in blk.items():
            maps[i] = Matrix(field, dims[v], hi - lo, [r[lo:hi] for r in rows], _trusted=True)
    return Representation(a, dims, maps, check=True)


# -- the Hom-graph -----------------------------------------------------------


@dataclass
class IndecGraph:
    """Directed graph on indecomposables; edge ``(i, j)`` when ``Hom(V_i, V_j) != 0``, self-loops included."""

    modules: list[Representation]
    hom: dict = dc_field(default_factory=dict)  # (i, j) -> dim Hom
    exhaustive: bool = False
    dim_bound: int | None = None

    @property
    def n(self) -> int:
        return len(self.modules)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.hom.items() if v > 0)

    def non_loop_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in self.edges if i != j]

    def labels(self, i: int) -> list[str]:
        return labels_of(self.modules[i])

    def display(self, i: int) -> str:
        labels = self.labels(i)
        return labels[0] if labels else f"Q{i}"

    def out_masks(self) -> list[int]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
        return masks

    def in_masks(self) -> list[int]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[j] |= 1 << i
        return masks

    def simple_vertices(self) -> list[int]:
        return [i for i in range(self.n) if any(lab.startswith("S_") for lab in self.labels(i))]

    def export(self) -> str:
        """Vertex table followed by the edge list ``Qi -> Qj dimHom=k``."""
        lines = ["# vertices"]
        for i, m in enumerate(self.modules):
            dims = " ".join(f"{v}={d}" for v, d in zip(m.algebra.vertices, m.dims))
            lines.append(f"Q{i} labels={','.join(self.labels(i)) or '-'} dims: {dims}")
        lines.append("# edges")
        for i, j in self.edges:
            lines.append(f"Q{i} -> Q{j} dimHom={self.hom[(i, j)]}")
        return "\n".join(lines) + "\n"


def hom_graph(a: BoundQuiverAlgebra, indecs: Sequence[Representation], exhaustive: bool = True,
              dim_bound: int | None = None) -> IndecGraph:
    g = IndecGraph(list(indecs), exhaustive=exhaustive, dim_bound=dim_bound)
    for i, m in enumerate(indecs):
        for j, n in enumerate(indecs):
            g.hom[(i, j)] = hom_dim(m, n)
        if g.hom[(i, i)] == 0:
            raise InputError("zero module in the vertex list")
    return g


def epsilon_steps(g: IndecGraph, q0: int, eps: Sequence[int]) -> list[set[int]]:
    """``R_0 = {q0}`` and each successive ``R_{i+1}``."""
    out, inn = g.out_masks(), g.in_masks()
    cur = 1 << q0
    layers = [cur]
    for e in eps:
        nxt = 0
        adj = out if e == 1 else inn
        i = 0
        c = cur
        while c:
            if c & 1:
                nxt |= adj[i]
            c >>= 1
            i += 1
        cur = nxt
        layers.append(cur)
    return [{i for i in range(g.n) if m >> i & 1} for m in layers]


def epsilon_reachable(g: IndecGraph, q0: int, eps: Sequence[int]) -> set[int]:
    """Vertices at the end of an ε-path starting at ``q0``."""
    if not 0 <= q0 < g.n:
        raise InputError(f"vertex {q0} not in graph")
    if any(e not in (1, -1) for e in eps):
        raise InputError("signs must be +1 or -1")
    return epsilon_steps(g, q0, eps)[-1]


@dataclass(frozen=True)
class EpsilonCertificate:
    source: int
    signs: tuple[int, ...]
    mode: str

    @property
    def r(self) -> int:
        return len(self.signs)

    @property
    def gldim_bound(self) -> int:
        return self.r + 1

    @property
    def sum_bound(self) -> int:
        return self.r + 2

    def signs_str(self) -> str:
        return "(" + ",".join("+1" if e == 1 else "-1" for e in self.signs) + ")"


def find_epsilon_certificate(g: IndecGraph, r_max: int = 5, mode: str = "all") -> EpsilonCertificate | None:
    """First ``(r, ε, q0)`` (r ascending, ε with +1 before -1, q0 by index) reaching every target."""
    if mode not in ("all", "simples"):
        raise ValueError("mode must be 'all' or 'simples'")
    if g.n == 0:
        return None
    if mode == "simples":
        targets = g.simple_vertices()
        a = g.modules[0].algebra
        if len(targets) != a.n:
            raise InputError("graph does not contain every simple module")
    else:
        targets = list(range(g.n))
    want = 0
    for t in targets:
        want |= 1 << t
    out, inn = g.out_masks(), g.in_masks()
    for r in range(1, r_max + 1):
        for eps in product((1, -1), repeat=r):
            for q0 in range(g.n):
                cur = 1 << q0
                for e in eps:
                    adj = out if e == 1 else inn
                    nxt = 0
                    i = 0
                    c = cur
                    while c:
                        if c & 1:
                            nxt |= adj[i]
                        c >>= 1
                        i += 1
                    cur = nxt
                if cur & want == want:
                    return EpsilonCertificate(q0, eps, mode)
    return None


def diameter(g: IndecGraph) -> float:
    """Largest shortest-path distance in the undirected shadow; ``math.inf`` when disconnected."""
    nbrs = [set() for _ in range(g.n)]
    for i, j in g.non_loop_edges():
        nbrs[i].add(j)
        nbrs[j].add(i)
    best = 0
    for s in range(g.n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(nbrs[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < g.n:
            return math.inf
        best = max(best, max(dist.values()))
    return best


def sincere_certificate(a: BoundQuiverAlgebra, indecs: Sequence[Representation]) -> Representation | None:
    """First sincere enumerated indecomposable; ``k_X`` for a connected poset if none was enumerated."""
    for m in indecs:
        if is_sincere(m):
            return m
    if a.poset is not None and a.n and a.poset.is_connected():
        field = indecs[0].algebra.field if indecs else a.field
        return constant_diagram(a.over(field))
    return None
