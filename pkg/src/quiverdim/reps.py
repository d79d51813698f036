"""Quiver representations (k-diagrams for incidence algebras), Hom spaces and decomposition."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .algebra import BoundQuiverAlgebra, opposite
from .exceptions import InputError
from .linalg import Matrix, block_diag, nullspace_basis, rank, rref, solve_matrix

ISO_SEED = 20081022
ISO_RANDOM_TRIES = 64
ENUMERATION_LIMIT = 2 ** 12
EXHAUSTIVE_END_LIMIT = 2 ** 12


def opposite_of(a: BoundQuiverAlgebra) -> BoundQuiverAlgebra:
    """Cached opposite algebra whose own opposite is ``a`` itself."""
    op = getattr(a, "_opposite", None)
    if op is None:
        op = opposite(a)
        op._opposite = a
        a._opposite = op
    return op


class Representation:
    """A module over a bound quiver algebra.

    ``dims[v]`` is the dimension at vertex index ``v``; ``maps[i]`` is the
    matrix of arrow ``i`` (``dims[target] x dims[source]``, acting on column
    vectors).
    """

    __slots__ = ("algebra", "dims", "maps", "name")

    def __init__(self, algebra: BoundQuiverAlgebra, dims: Sequence[int], maps: Sequence[Matrix] | None = None,
                 name: str | None = None, check: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.name = name
        field = algebra.field
        if len(self.dims) != algebra.n:
            raise InputError(f"expected {algebra.n} dimensions, got {len(self.dims)}")
        if any(d < 0 for d in self.dims):
            raise InputError("dimensions must be non-negative")
        if maps is None:
            maps = [Matrix.zeros(field, self.dims[t], self.dims[s]) for _, s, t in algebra.arrows]
        self.maps = list(maps)
        if check:
            self.validate()

    @classmethod
    def from_dict(cls, algebra: BoundQuiverAlgebra, dims: dict, maps: dict | None = None, name=None) -> "Representation":
        """Build from vertex-name and arrow-name keyed dictionaries; omitted maps are zero."""
        d = [0] * algebra.n
        for v, k in dims.items():
            d[algebra.index(v)] = k
        mats = []
        maps = maps or {}
        for i, (aname, s, t) in enumerate(algebra.arrows):
            if aname in maps:
                rows = maps[aname]
                mats.append(rows if isinstance(rows, Matrix) else Matrix(algebra.field, d[t], d[s], rows))
            else:
                mats.append(Matrix.zeros(algebra.field, d[t], d[s]))
        unknown = set(maps) - {a[0] for a in algebra.arrows}
        if unknown:
            raise InputError(f"unknown arrows {sorted(unknown)}")
        return cls(algebra, d, mats, name=name)

    def validate(self):
        a = self.algebra
        for i, (aname, s, t) in enumerate(a.arrows):
            m = self.maps[i]
            if m.field != a.field:
                raise InputError(f"map of arrow {aname} is over {m.field}, algebra is over {a.field}")
            if m.shape != (self.dims[t], self.dims[s]):
                raise InputError(f"map of arrow {aname} has shape {m.shape}, expected {(self.dims[t], self.dims[s])}")
        for s, t, terms in a._rels:
            total = Matrix.zeros(a.field, self.dims[t], self.dims[s])
            for c, path in terms:
                total = total + self.path_map(s, path).scale(c)
            if not total.is_zero():
                raise InputError("representation does not satisfy the relations")

    def path_map(self, source: int, path: Sequence[int]) -> Matrix:
        m = Matrix.identity(self.algebra.field, self.dims[source])
        for a in path:
            m = self.maps[a] @ m
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    @property
    def support(self) -> list[int]:
        return [v for v, d in enumerate(self.dims) if d]

    def dims_by_name(self) -> dict:
        return dict(zip(self.algebra.vertices, self.dims))

    def key(self):
        return (self.dims, tuple(tuple(map(tuple, m.rows)) for m in self.maps))

    def __eq__(self, other):
        return isinstance(other, Representation) and self.algebra is other.algebra and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"<Representation {label}dims={self.dims}>"


@dataclass
class HomSpace:
    source: Representation
    target: Representation
    basis: list  # list of per-vertex Matrix lists

    @property
    def dim(self) -> int:
        return len(self.basis)

    def combination(self, coeffs) -> list[Matrix]:
        field = self.source.algebra.field
        out = [Matrix.zeros(field, self.target.dims[v], self.source.dims[v]) for v in range(len(self.source.dims))]
        for c, phi in zip(coeffs, self.basis):
            c = field(c)
            if c == 0:
                continue
            out = [o + f.scale(c) for o, f in zip(out, phi)]
        return out


def _same_algebra(m: Representation, n: Representation):
    if m.algebra is not n.algebra and not m.algebra.structurally_equal(n.algebra):
        raise InputError("representations live over different algebras")


def hom_equations(m: Representation, n: Representation) -> tuple[Matrix, list[int]]:
    """Coefficient matrix of the naturality conditions for ``phi: m -> n``, plus vertex offsets."""
    a = m.algebra
    field = a.field
    p = field.characteristic
    offsets = []
    nvars = 0
    for v in range(a.n):
        offsets.append(nvars)
        nvars += n.dims[v] * m.dims[v]
    rows = []
    zero = field.zero
    for i, (_, s, t) in enumerate(a.arrows):
        ms, mt, ns, nt = m.dims[s], m.dims[t], n.dims[s], n.dims[t]
        if ms == 0 or nt == 0:
            continue
        M = m.maps[i].rows
        N = n.maps[i].rows
        ot, os_ = offsets[t], offsets[s]
        # (phi_t M(a) - N(a) phi_s)[r][c] = 0
        for r in range(nt):
            for c in range(ms):
                row = [zero] * nvars
                for k in range(mt):
                    x = M[k][c]
                    if x:
                        row[ot + r * mt + k] += x
                for k in range(ns):
                    x = N[r][k]
                    if x:
                        row[os_ + k * ms + c] -= x
                if p:
                    row = [x % p for x in row]
                rows.append(row)
    return Matrix(field, len(rows), nvars, rows, _trusted=True), offsets


def hom_basis(m: Representation, n: Representation) -> HomSpace:
    """Basis of ``Hom(m, n)`` in the RREF kernel parameterization."""
    _same_algebra(m, n)
    a = m.algebra
    eqs, offsets = hom_equations(m, n)
    if eqs.nrows == 0:
        kernel = [[a.field.one if i == j else a.field.zero for i in range(eqs.ncols)] for j in range(eqs.ncols)]
    else:
        kernel = nullspace_basis(eqs)
    basis = [_unflatten(vec, m, n, offsets) for vec in kernel]
    return HomSpace(m, n, basis)


def hom_dim(m: Representation, n: Representation) -> int:
    _same_algebra(m, n)
    eqs, _ = hom_equations(m, n)
    return eqs.ncols - (rank(eqs) if eqs.nrows else 0)


def _unflatten(vec, m, n, offsets):
    field = m.algebra.field
    out = []
    for v in range(len(m.dims)):
        r, c = n.dims[v], m.dims[v]
        o = offsets[v]
        out.append(Matrix(field, r, c, [vec[o + i * c:o + (i + 1) * c] for i in range(r)], _trusted=True))
    return out


def compose(psi: Sequence[Matrix], phi: Sequence[Matrix]) -> list[Matrix]:
    """``psi o phi`` vertexwise."""
    return [b @ a for a, b in zip(phi, psi)]


def is_homomorphism(phi: Sequence[Matrix], m: Representation, n: Representation) -> bool:
    for i, (_, s, t) in enumerate(m.algebra.arrows):
        if phi[t] @ m.maps[i] != n.maps[i] @ phi[s]:
            return False
    return True


def is_invertible(phi: Sequence[Matrix]) -> bool:
    return all(f.nrows == f.ncols and (f.nrows == 0 or rank(f) == f.nrows) for f in phi)


# -- standard modules -------------------------------------------------


def simple_at(a: BoundQuiverAlgebra, x) -> Representation:
    x = a.index(x)
    dims = [1 if v == x else 0 for v in range(a.n)]
    return Representation(a, dims, name=f"S_{a.vertices[x]}", check=False)


def projective_at(a: BoundQuiverAlgebra, x) -> Representation:
    """``P_x``: paths out of ``x`` modulo the ideal, arrows acting by right composition."""
    x = a.index(x)
    dims = [len(a.basis(x, y)) for y in range(a.n)]
    field = a.field
    maps = []
    for i, (_, s, t) in enumerate(a.arrows):
        cols = [a.reduce(x, t, b + (i,)) for b in a.basis(x, s)]
        maps.append(Matrix.from_columns(field, cols, dims[t]))
    return Representation(a, dims, maps, name=f"P_{a.vertices[x]}", check=False)


def dual(m: Representation, target: BoundQuiverAlgebra) -> Representation:
    """Vertexwise dual of ``m``, a module over ``target`` (the opposite of ``m.algebra``)."""
    maps = [f.transpose() for f in m.maps]
    return Representation(target, m.dims, maps, name=None, check=False)


def injective_at(a: BoundQuiverAlgebra, x) -> Representation:
    x = a.index(x)
    op = opposite_of(a)
    inj = dual(projective_at(op, x), a)
    inj.name = f"I_{a.vertices[x]}"
    return inj


def constant_diagram(a: BoundQuiverAlgebra) -> Representation:
    """``k_X``: the field at every element, identities along the order."""
    if a.poset is None:
        raise InputError("constant diagram needs an incidence algebra")
    one = a.field.one
    maps = [Matrix(a.field, 1, 1, [[one]], _trusted=True) for _ in a.arrows]
    return Representation(a, [1] * a.n, maps, name="k_X", check=False)


def direct_sum(*ms: Representation) -> Representation:
    if not ms:
        raise InputError("direct sum of nothing")
    a = ms[0].algebra
    for m in ms[1:]:
        _same_algebra(ms[0], m)
    dims = [sum(m.dims[v] for m in ms) for v in range(a.n)]
    maps = [block_diag(a.field, [m.maps[i] for m in ms]) for i in range(len(a.arrows))]
    return Representation(a, dims, maps, check=False)


def restrict(m: Representation, bases: Sequence[Sequence[Sequence]]) -> Representation:
    """Submodule spanned at each vertex by the column vectors ``bases[v]`` (must be arrow-stable)."""
    a = m.algebra
    field = a.field
    dims = [len(b) for b in bases]
    B = [Matrix.from_columns(field, bases[v], m.dims[v]) for v in range(a.n)]
    maps = []
    for i, (_, s, t) in enumerate(a.arrows):
        if dims[s] == 0 or dims[t] == 0:
            maps.append(Matrix.zeros(field, dims[t], dims[s]))
            continue
        x = solve_matrix(B[t], m.maps[i] @ B[s])
        if x is None:
            raise ValueError("subspaces are not closed under the arrow maps")
        maps.append(x)
    return Representation(a, dims, maps, check=False)


def is_sincere(m: Representation) -> bool:
    return all(d > 0 for d in m.dims)


# -- endomorphisms and decomposition ------------------------------------


def _power(f: Matrix, k: int) -> Matrix:
    result = Matrix.identity(f.field, f.nrows)
    base = f
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def fitting_split(m: Representation, phi: Sequence[Matrix]):
    """``(ker, im)`` bases of ``phi^N`` when ``phi`` is neither nilpotent nor invertible, else ``None``."""
    n = max(m.dims, default=0)
    powers = [_power(f, n) for f in phi]
    ranks = [rank(f) for f in powers]
    if all(r == 0 for r in ranks) or all(r == d for r, d in zip(ranks, m.dims)):
        return None
    ker = [nullspace_basis(f) if f.ncols else [] for f in powers]
    im = []
    for f in powers:
        _, _, piv = rref(f)
        im.append([f.column(j) for j in piv])
    return ker, im


def _candidates(basis):
    for phi in basis:
        yield phi
    for a, b in combinations(basis, 2):
        yield [x + y for x, y in zip(a, b)]


class EndAnalysis(NamedTuple):
    dim_end: int
    dim_radical: int
    local: bool | None  # None means inconclusive


def _trace(phi) -> object:
    total = 0
    for f in phi:
        for i in range(f.nrows):
            total += f.rows[i][i]
    return total


def end_ring_analysis(m: Representation) -> EndAnalysis:
    """Dimension of ``End(m)``, of its radical, and whether it is local.

    The radical is the kernel of the trace form ``(u, v) -> tr(uv)``, which
    is only valid in characteristic 0.
    """
    field = m.algebra.field
    if not field.is_rational:
        raise NotImplementedError("trace-form radical needs characteristic 0; use fitting_decompose")
    end = hom_basis(m, m)
    k = end.dim
    if k == 0:
        return EndAnalysis(0, 0, False)
    gram = [[field(_trace(compose(u, v))) for v in end.basis] for u in end.basis]
    r = rank(Matrix(field, k, k, gram, _trusted=True))
    rad = k - r
    if k - rad == 1:
        return EndAnalysis(k, rad, True)
    for phi in _candidates(end.basis):
        if fitting_split(m, phi) is not None:
            return EndAnalysis(k, rad, False)
    return EndAnalysis(k, rad, None)


def _find_split(m: Representation, end: HomSpace):
    for phi in _candidates(end.basis):
        split = fitting_split(m, phi)
        if split is not None:
            return split
    field = m.algebra.field
    if not field.is_rational and field.characteristic ** end.dim <= EXHAUSTIVE_END_LIMIT:
        for coeffs in product(field.elements(), repeat=end.dim):
            weight = sum(1 for c in coeffs if c)
            if weight < 2 or (weight == 2 and field.characteristic == 2):
                continue  # already covered by the basis/pairwise scan
            split = fitting_split(m, end.combination(coeffs))
            if split is not None:
                return split
    return None


def is_indecomposable(m: Representation) -> bool:
    if m.is_zero():
        return False
    if m.algebra.field.is_rational:
        res = end_ring_analysis(m)
        if res.local is None:
            warnings.warn("endomorphism ring test inconclusive; treating module as indecomposable")
            return True
        return res.local
    return _find_split(m, hom_basis(m, m)) is None


def fitting_decompose(m: Representation) -> list[Representation]:
    """Split ``m`` into indecomposable summands via Fitting's lemma.

    The summands' dimension vectors add up to ``m.dims``; order follows
    the recursion (kernel part before image part).
    """
    if m.is_zero():
        return []
    split = _find_split(m, hom_basis(m, m))
    if split is None:
        if m.algebra.field.is_rational and end_ring_analysis(m).local is not True:
            warnings.warn(f"summand with dims {m.dims} could not be certified indecomposable")
        return [m]
    ker, im = split
    return fitting_decompose(restrict(m, ker)) + fitting_decompose(restrict(m, im))


# -- isomorphism ------------------------------------------------------------


def _indecomposable_iso(m: Representation, n: Representation, hmn: HomSpace | None = None) -> bool:
    """Exact test for indecomposable ``m``, ``n``: some ``psi o phi`` of basis maps is invertible."""
    hmn = hmn or hom_basis(m, n)
    if hmn.dim == 0:
        return False
    hnm = hom_basis(n, m)
    for phi in hmn.basis:
        for psi in hnm.basis:
            if is_invertible(compose(psi, phi)):
                return True
    return False


def are_isomorphic(m: Representation, n: Representation, indecomposable: bool = False) -> bool:
    """Whether ``m`` and ``n`` are isomorphic.

    Pass ``indecomposable=True`` when both modules are known to be
    indecomposable; the test is then exact over every field.
    """
    _same_algebra(m, n)
    if m.dims != n.dims:
        return False
    if m.is_zero():
        return True
    hmn = hom_basis(m, n)
    if indecomposable:
        return _indecomposable_iso(m, n, hmn)
    if hmn.dim != hom_dim(n, m):
        return False
    field = m.algebra.field
    for phi in hmn.basis:
        if is_invertible(phi):
            return True
    rng = random.Random(ISO_SEED)
    for _ in range(ISO_RANDOM_TRIES):
        if field.is_rational:
            coeffs = [rng.randint(-9, 9) for _ in hmn.basis]
        else:
            coeffs = [rng.randrange(field.characteristic) for _ in hmn.basis]
        if is_invertible(hmn.combination(coeffs)):
            return True
    if not field.is_rational and field.characteristic ** hmn.dim <= ENUMERATION_LIMIT:
        for coeffs in product(field.elements(), repeat=hmn.dim):
            if is_invertible(hmn.combination(coeffs)):
                return True
        return False
    # Krull-Schmidt: match indecomposable summands pairwise
    parts_m = fitting_decompose(m)
    parts_n = fitting_decompose(n)
    if len(parts_m) != len(parts_n):
        return False
    remaining = list(parts_n)
    for pm in parts_m:
        for j, pn in enumerate(remaining):
            if pm.dims == pn.dims and _indecomposable_iso(pm, pn):
                del remaining[j]
                break
        else:
            return False
    return True
