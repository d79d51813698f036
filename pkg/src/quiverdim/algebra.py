"""Finite posets, quivers with relations and their path-basis algebras."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product as cartesian
from typing import Iterable, Sequence

from .exceptions import InputError, NotAdmissibleError
from .linalg import QQ, Field, Matrix, _rref_inplace

DEFAULT_PATH_BOUND = 24


@dataclass(frozen=True)
class Poset:
    """A finite poset stored by its Hasse diagram.

    ``covers`` holds pairs ``(x, y)`` with ``y`` covering ``x``; ``order``
    is the full reflexive relation ``x <= y``.  Use :func:`poset_from_covers`
    to build one.
    """

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    order: frozenset = dc_field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.order

    def comparable_pairs(self) -> list[tuple[str, str]]:
        """All pairs ``x <= y`` in input order."""
        return [(x, y) for x in self.elements for y in self.elements if (x, y) in self.order]

    def up_set(self, x: str) -> list[str]:
        return [y for y in self.elements if (x, y) in self.order]

    def down_set(self, x: str) -> list[str]:
        return [y for y in self.elements if (y, x) in self.order]

    def dual(self) -> "Poset":
        return poset_from_covers(self.elements, [(y, x) for x, y in self.covers])

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def is_antichain(self) -> bool:
        return not self.covers

    def induced(self, subset: Iterable[str]) -> "Poset":
        keep = set(subset)
        elems = [x for x in self.elements if x in keep]
        rel = [(x, y) for x in elems for y in elems if x != y and (x, y) in self.order]
        return poset_from_covers(elems, rel, warn=False)

    def minimal_elements(self) -> list[str]:
        tops = {y for _, y in self.covers}
        return [x for x in self.elements if x not in tops]

    def maximal_elements(self) -> list[str]:
        bottoms = {x for x, _ in self.covers}
        return [x for x in self.elements if x not in bottoms]


def _find_cycle(elements, succ):
    state = {x: 0 for x in elements}
    stack_path = []

    def visit(x):
        state[x] = 1
        stack_path.append(x)
        for y in succ[x]:
            if state[y] == 1:
                return stack_path[stack_path.index(y):] + [y]
            if state[y] == 0:
                cyc = visit(y)
                if cyc:
                    return cyc
        stack_path.pop()
        state[x] = 2
        return None

    for x in elements:
        if state[x] == 0:
            cyc = visit(x)
            if cyc:
                return cyc
    return None


def poset_from_covers(elements: Sequence[str] | None, covers: Iterable[tuple[str, str]], warn: bool = True) -> Poset:
    """Build a poset from (possibly redundant) cover pairs ``(x, y)`` meaning ``x < y``.

    ``elements`` may be ``None``, in which case the element set is the set
    of names appearing in ``covers``, in order of first appearance.
    Transitively redundant pairs are dropped with a warning.
    """
    covers = [(str(x), str(y)) for x, y in covers]
    if elements is None:
        elements = []
        seen = set()
        for x, y in covers:
            for z in (x, y):
                if z not in seen:
                    seen.add(z)
                    elements.append(z)
    elements = [str(x) for x in elements]
    if len(set(elements)) != len(elements):
        raise InputError("element names must be unique")
    known = set(elements)
    for x, y in covers:
        if x not in known or y not in known:
            raise InputError(f"cover ({x}, {y}) mentions an unknown element")
    succ = {x: [] for x in elements}
    for x, y in covers:
        if y not in succ[x]:
            succ[x].append(y)
    cycle = _find_cycle(elements, succ)
    if cycle:
        raise InputError("cycle detected: " + " < ".join(cycle))

    pos = {x: i for i, x in enumerate(elements)}
    reach = {x: {x} for x in elements}
    # reverse topological order so successors are complete before predecessors
    topo = _topological_order(elements, succ)
    for x in reversed(topo):
        for y in succ[x]:
            reach[x] |= reach[y]
    order = frozenset((x, y) for x in elements for y in reach[x])

    hasse = []
    redundant = []
    for x in elements:
        for y in sorted(succ[x], key=pos.__getitem__):
            if any(z != y and y in reach[z] for z in succ[x]):
                redundant.append((x, y))
            else:
                hasse.append((x, y))
    if redundant and warn:
        warnings.warn("dropping transitively redundant covers: " + ", ".join(f"{x} < {y}" for x, y in redundant), stacklevel=2)
    return Poset(tuple(elements), tuple(hasse), order)


def _topological_order(elements, succ):
    indeg = {x: 0 for x in elements}
    for x in elements:
        for y in succ[x]:
            indeg[y] += 1
    out = []
    ready = [x for x in elements if indeg[x] == 0]
    pos = {x: i for i, x in enumerate(elements)}
    while ready:
        ready.sort(key=pos.__getitem__)
        x = ready.pop(0)
        out.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return out


def poset_from_order(elements: Sequence[str], leq) -> Poset:
    """Poset from an order predicate; covers are recomputed as the Hasse diagram."""
    elements = list(elements)
    less = {x: [y for y in elements if x != y and leq(x, y)] for x in elements}
    covers = []
    for x in elements:
        for y in less[x]:
            if not any(y in less[z] for z in less[x]):
                covers.append((x, y))
    return poset_from_covers(elements, covers, warn=False)


def poset_product(x: Poset, y: Poset, sep: str = ",") -> Poset:
    """Componentwise order on the cartesian product; elements are named ``"a,b"``."""
    pairs = list(cartesian(x.elements, y.elements))
    names = {p: f"{p[0]}{sep}{p[1]}" for p in pairs}
    covers = []
    for a, b in pairs:
        for a2, b2 in x.covers:
            if a2 == a:
                covers.append((names[(a, b)], names[(b2, b)]))
        for b1, b2 in y.covers:
            if b1 == b:
                covers.append((names[(a, b)], names[(a, b2)]))
    return poset_from_covers([names[p] for p in pairs], covers, warn=False)


def disjoint_union(x: Poset, y: Poset) -> Poset:
    if set(x.elements) & set(y.elements):
        raise InputError("disjoint union needs distinct element names")
    return poset_from_covers(x.elements + y.elements, x.covers + y.covers, warn=False)


def connected_components(p: Poset) -> list[Poset]:
    """Zigzag-connected components as induced subposets, ordered by smallest element name."""
    parent = {x: x for x in p.elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in p.covers:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx
    groups: dict[str, list[str]] = {}
    for x in p.elements:
        groups.setdefault(find(x), []).append(x)
    comps = [p.induced(g) for g in groups.values()]
    comps.sort(key=lambda c: min(c.elements))
    return comps


def chain(n: int, prefix: str = "") -> Poset:
    names = [f"{prefix}{i}" for i in range(n)]
    return poset_from_covers(names, list(zip(names, names[1:])))


def antichain(n: int, prefix: str = "") -> Poset:
    return poset_from_covers([f"{prefix}{i}" for i in range(n)], [])


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex names must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InputError(f"arrow {a.name} has an endpoint that is not a vertex")

    @classmethod
    def build(cls, vertices: Iterable[str], arrows: Iterable[tuple[str, str, str]]) -> "Quiver":
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows))

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise InputError(f"unknown arrow {name!r}")

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def has_oriented_cycle(self) -> bool:
        succ = {v: [] for v in self.vertices}
        for a in self.arrows:
            succ[a.source].append(a.target)
        return _find_cycle(self.vertices, succ) is not None


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths; each path is a tuple of arrow names in traversal order."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    @classmethod
    def build(cls, terms: Iterable[tuple[object, Sequence[str]]]) -> "Relation":
        return cls(tuple((Fraction(c), tuple(p)) for c, p in terms))

    @classmethod
    def monomial(cls, *arrows: str) -> "Relation":
        return cls(((Fraction(1), tuple(arrows)),))

    def endpoints(self, quiver: Quiver) -> tuple[str, str]:
        ends = set()
        for _, path in self.terms:
            if not path:
                raise InputError("relation paths must be nonempty")
            arrows = [quiver.arrow(n) for n in path]
            for a, b in zip(arrows, arrows[1:]):
                if a.target != b.source:
                    raise InputError(f"path {'.'.join(path)} is not composable")
            ends.add((arrows[0].source, arrows[-1].target))
        if len(ends) != 1:
            raise InputError("relation paths are not parallel")
        return ends.pop()

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(p))) for c, p in self.terms))

    def __str__(self):
        parts = []
        for c, p in self.terms:
            path = ".".join(p)
            parts.append(path if c == 1 else f"{c}*{path}")
        return " + ".join(parts)


class BoundQuiverAlgebra:
    """``kQ/I`` for an admissible ideal ``I`` generated by ``relations``.

    Paths are tuples of arrow indices in traversal order; the trivial path
    at a vertex is ``()``.  For each vertex pair ``(x, y)`` the algebra keeps
    a list of basis paths spanning ``e_x A e_y`` and the coordinates of
    every shorter-than-nilpotency path in that basis.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], field: Field = QQ,
                 poset: Poset | None = None, path_bound: int = DEFAULT_PATH_BOUND):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.field = field
        self.poset = poset
        self.path_bound = path_bound
        self.vertices = quiver.vertices
        self._vindex = {v: i for i, v in enumerate(quiver.vertices)}
        self._aindex = {a.name: i for i, a in enumerate(quiver.arrows)}
        self.arrows = tuple((a.name, self._vindex[a.source], self._vindex[a.target]) for a in quiver.arrows)
        self.out_arrows = [[] for _ in self.vertices]
        self.in_arrows = [[] for _ in self.vertices]
        for i, (_, s, t) in enumerate(self.arrows):
            self.out_arrows[s].append(i)
            self.in_arrows[t].append(i)
        self._rels = []
        for rel in self.relations:
            s, t = rel.endpoints(quiver)
            terms = []
            for c, path in rel.terms:
                if len(path) < 2:
                    raise NotAdmissibleError(f"relation {rel} has a term of length < 2")
                terms.append((field(c), tuple(self._aindex[n] for n in path)))
            self._rels.append((self._vindex[s], self._vindex[t], terms))
        self._compute_basis()

    # -- construction -------------------------------------------------

    def _paths_by_length(self, max_len):
        """paths[(x, y)] -> list of paths of length <= max_len, shortest first."""
        n = len(self.vertices)
        paths = {}
        layer = [(x, x, ()) for x in range(n)]
        for length in range(max_len + 1):
            for x, y, p in layer:
                paths.setdefault((x, y), []).append(p)
            if length == max_len:
                break
            nxt = []
            for x, y, p in layer:
                for a in self.out_arrows[y]:
                    nxt.append((x, self.arrows[a][2], p + (a,)))
            layer = nxt
            if not layer:
                break
        return paths

    def _ideal_rows(self, paths, max_len):
        """Spanning vectors of the truncated two-sided ideal, grouped by vertex pair."""
        rows = {}
        into = {}
        out_of = {}
        for (x, y), ps in paths.items():
            into.setdefault(y, []).extend((x, p) for p in ps)
            out_of.setdefault(x, []).extend((y, p) for p in ps)
        p = self.field.characteristic
        for s, t, terms in self._rels:
            min_len = min(len(path) for _, path in terms)
            for x, u in into.get(s, []):
                if len(u) + min_len > max_len:
                    continue
                for y, v in out_of.get(t, []):
                    if len(u) + len(v) + min_len > max_len:
                        continue
                    vec = {}
                    for c, path in terms:
                        q = u + path + v
                        if len(q) <= max_len:
                            vec[q] = ((vec.get(q, 0) + c) % p) if p else vec.get(q, 0) + c
                    vec = {q: c for q, c in vec.items() if c != 0}
                    if vec:
                        rows.setdefault((x, y), []).append(vec)
        return rows

    def _quotient(self, pair_paths, vecs):
        """RREF the ideal inside span(pair_paths); return (basis, reduction table)."""
        field = self.field
        # longest paths first so the shortest paths survive as basis representatives
        cols = sorted(pair_paths, key=lambda q: (-len(q), tuple(-a for a in q)))
        cidx = {q: i for i, q in enumerate(cols)}
        mat = []
        for vec in vecs:
            row = [field.zero] * len(cols)
            for q, c in vec.items():
                row[cidx[q]] = c
            mat.append(row)
        pivots = _rref_inplace(mat, len(cols), field)
        pivset = set(pivots)
        free = [j for j in range(len(cols)) if j not in pivset]
        # present basis in the natural (shortest first) order
        free.sort(key=lambda j: (len(cols[j]), cols[j]))
        basis = [cols[j] for j in free]
        fpos = {j: k for k, j in enumerate(free)}
        p = field.characteristic
        table = {}
        for j, q in enumerate(cols):
            coords = [field.zero] * len(free)
            if j in fpos:
                coords[fpos[j]] = field.one
            else:
                row = mat[pivots.index(j)]
                for fj, k in fpos.items():
                    if row[fj] != 0:
                        coords[k] = (-row[fj]) % p if p else -row[fj]
            table[q] = coords
        return basis, table

    def _all_long_paths_die(self, length, ideal_rows, paths):
        for (x, y), ps in paths.items():
            longs = [q for q in ps if len(q) == length]
            if not longs:
                continue
            _, table = self._quotient(ps, ideal_rows.get((x, y), []))
            if any(any(c != 0 for c in table[q]) for q in longs):
                return False
        return True

    def _compute_basis(self):
        cyclic = self.quiver.has_oriented_cycle()
        if not cyclic:
            longest = self._longest_path()
            nil = longest + 1
        else:
            nil = None
            for length in range(1, self.path_bound + 1):
                window = min(2 * length, self.path_bound * 2)
                paths = self._paths_by_length(window)
                rows = self._ideal_rows(paths, window)
                if self._all_long_paths_die(length, rows, paths):
                    nil = length
                    break
            if nil is None:
                raise NotAdmissibleError(
                    f"arrow ideal not nilpotent modulo relations within bound {self.path_bound}; not admissible within bound")
        self.nilpotency = nil
        paths = self._paths_by_length(nil - 1)
        rows = self._ideal_rows(paths, nil - 1)
        self._basis = {}
        self._table = {}
        for pair, ps in paths.items():
            basis, table = self._quotient(ps, rows.get(pair, []))
            if basis:
                self._basis[pair] = basis
            self._table[pair] = table

    def _longest_path(self):
        n = len(self.vertices)
        order = _topological_order(list(range(n)), {v: [self.arrows[a][2] for a in self.out_arrows[v]] for v in range(n)})
        best = {v: 0 for v in range(n)}
        for v in reversed(order):
            for a in self.out_arrows[v]:
                best[v] = max(best[v], 1 + best[self.arrows[a][2]])
        return max(best.values(), default=0)

    # -- queries ------------------------------------------------------

    def index(self, vertex) -> int:
        if isinstance(vertex, int):
            if not 0 <= vertex < len(self.vertices):
                raise InputError(f"unknown vertex index {vertex}")
            return vertex
        try:
            return self._vindex[str(vertex)]
        except KeyError:
            raise InputError(f"unknown vertex {vertex!r}") from None

    def arrow_index(self, name: str) -> int:
        try:
            return self._aindex[name]
        except KeyError:
            raise InputError(f"unknown arrow {name!r}") from None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def basis(self, x: int, y: int) -> list[tuple[int, ...]]:
        """Basis paths of ``e_x A e_y``."""
        return self._basis.get((x, y), [])

    def reduce(self, x: int, y: int, path: tuple[int, ...]) -> list:
        """Coordinates of the class of ``path`` (from x to y) in ``basis(x, y)``."""
        table = self._table.get((x, y))
        k = len(self.basis(x, y))
        if table is None or path not in table:
            return [self.field.zero] * k
        return table[path]

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self._basis.values())

    def cartan(self) -> list[list[int]]:
        return [[len(self.basis(x, y)) for y in range(self.n)] for x in range(self.n)]

    @property
    def is_incidence(self) -> bool:
        return self.poset is not None

    def over(self, field: Field) -> "BoundQuiverAlgebra":
        """The same quiver and relations over ``field`` (cached per field)."""
        if field == self.field:
            return self
        cache = self.__dict__.setdefault("_over_cache", {})
        if field not in cache:
            cache[field] = BoundQuiverAlgebra(self.quiver, self.relations, field, self.poset, self.path_bound)
        return cache[field]

    def topological_vertices(self) -> list[int] | None:
        """Vertex indices in a topological order, or ``None`` if the quiver has an oriented cycle."""
        if self.quiver.has_oriented_cycle():
            return None
        return _topological_order(list(range(self.n)), {v: [self.arrows[a][2] for a in self.out_arrows[v]] for v in range(self.n)})

    def structurally_equal(self, other: "BoundQuiverAlgebra") -> bool:
        return (self.quiver == other.quiver and self.relations == other.relations
                and self.field == other.field and self.poset == other.poset)

    def __repr__(self):
        kind = f"incidence algebra of {len(self.poset)}-element poset" if self.poset is not None else "bound quiver algebra"
        return f"<{kind}: {self.n} vertices, {len(self.arrows)} arrows, dim {self.dim} over {self.field}>"


def bound_quiver_algebra(quiver: Quiver, relations: Sequence[Relation], field: Field = QQ,
                         path_bound: int = DEFAULT_PATH_BOUND) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(quiver, relations, field, path_bound=path_bound)


def hasse_quiver(p: Poset) -> Quiver:
    return Quiver.build(p.elements, [(f"{x}->{y}", x, y) for x, y in p.covers])


def incidence_algebra(p: Poset, field: Field = QQ) -> BoundQuiverAlgebra:
    """Incidence algebra ``kX`` as the Hasse quiver modulo all commutativity relations."""
    quiver = hasse_quiver(p)
    name = {(a.source, a.target): a.name for a in quiver.arrows}
    succ = {x: [] for x in p.elements}
    for x, y in p.covers:
        succ[x].append(y)

    def hasse_paths(x, y):
        if x == y:
            return [()]
        out = []
        for z in succ[x]:
            if p.leq(z, y):
                out.extend((name[(x, z)],) + rest for rest in hasse_paths(z, y))
        return out

    relations = []
    for x, y in p.comparable_pairs():
        if x == y:
            continue
        ps = hasse_paths(x, y)
        for other in ps[1:]:
            relations.append(Relation.build([(1, ps[0]), (-1, other)]))
    return BoundQuiverAlgebra(quiver, relations, field, poset=p)


def opposite(a: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Reverse every arrow and every relation path; incidence algebras go to the dual poset."""
    poset = None
    if a.poset is not None:
        poset = poset_from_covers(a.poset.elements, [(y, x) for x, y in a.poset.covers], warn=False)
    return BoundQuiverAlgebra(a.quiver.opposite(), [r.reversed() for r in a.relations], a.field, poset, a.path_bound)
