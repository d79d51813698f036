"""Exact dense linear algebra over the rationals and small prime fields.

Entries are plain Python objects: :class:`fractions.Fraction` over Q and
``int`` in ``range(p)`` over GF(p).  Elimination always picks the topmost
nonzero entry of the leftmost remaining column, so results are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import InputError

MAX_CHARACTERISTIC = 251


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (``characteristic == 0``) or GF(p)."""

    kind: str = "rationals"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("the rationals have characteristic 0")
        elif self.kind == "prime-field":
            p = self.characteristic
            if not _is_prime(p) or p > MAX_CHARACTERISTIC:
                raise ValueError(f"characteristic must be a prime <= {MAX_CHARACTERISTIC}, got {p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, x) -> object:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.characteristic == 0:
            return Fraction(x)
        p = self.characteristic
        if isinstance(x, Fraction):
            return (x.numerator % p) * pow(x.denominator % p, p - 2, p) % p
        return int(x) % p

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic == 0:
            return 1 / a
        return pow(a, self.characteristic - 2, self.characteristic)

    def elements(self):
        """All elements of a prime field, in increasing order."""
        if self.characteristic == 0:
            raise ValueError("the rationals are infinite")
        return range(self.characteristic)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "rational"):
            return QQ
        if t.startswith("gf"):
            t = t[2:].strip("()")
        return GF(int(t))


QQ = Field()


def GF(p: int) -> Field:
    return Field("prime-field", p)


class Matrix:
    """Dense row-major matrix over a single :class:`Field`."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows=None, *, _trusted=False):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            z = field.zero
            self.rows = [[z] * ncols for _ in range(nrows)]
        elif _trusted:
            self.rows = rows
        else:
            rows = [[field(x) for x in r] for r in rows]
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise InputError(f"entries do not form a {nrows}x{ncols} matrix")
            self.rows = rows

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(field, nrows, len(cols), rows, _trusted=True)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [r[:] for r in self.rows], _trusted=True)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.rows[i][j] = self.field(value)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.shape, tuple(map(tuple, self.rows))))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows_as_str()})"

    def rows_as_str(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in self.rows) + "]"

    def column(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows, [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)], _trusted=True)

    T = property(transpose)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise InputError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.characteristic
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = sum(a * b for a, b in zip(r, c) if a and b)
                row.append(s % p if p else Fraction(s))
            out.append(row)
        return Matrix(self.field, self.nrows, other.ncols, out, _trusted=True)

    def apply(self, v: Sequence) -> list:
        """Matrix times column vector."""
        p = self.field.characteristic
        out = []
        for r in self.rows:
            s = sum(a * b for a, b in zip(r, v) if a and b)
            out.append(s % p if p else Fraction(s))
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise InputError("shape mismatch")
        p = self.field.characteristic
        rows = [[(a + b) % p if p else a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        return Matrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        p = self.field.characteristic
        rows = [[(c * a) % p if p else c * a for a in r] for r in self.rows]
        return Matrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix(self.field, len(rows), len(cols), [[self.rows[i][j] for j in cols] for i in rows], _trusted=True)

    def rank(self) -> int:
        return rref(self)[1]


def hstack(field: Field, blocks: Sequence[Matrix], nrows: int) -> Matrix:
    rows = [[] for _ in range(nrows)]
    for b in blocks:
        if b.nrows != nrows:
            raise InputError("row count mismatch in hstack")
        for r, br in zip(rows, b.rows):
            r.extend(br)
    return Matrix(field, nrows, sum(b.ncols for b in blocks), rows, _trusted=True)


def vstack(field: Field, blocks: Sequence[Matrix], ncols: int) -> Matrix:
    rows = []
    for b in blocks:
        if b.ncols != ncols:
            raise InputError("column count mismatch in vstack")
        rows.extend(r[:] for r in b.rows)
    return Matrix(field, len(rows), ncols, rows, _trusted=True)


def block_diag(field: Field, blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = Matrix.zeros(field, n, m)
    i = j = 0
    for b in blocks:
        for r in range(b.nrows):
            out.rows[i + r][j:j + b.ncols] = b.rows[r]
        i += b.nrows
        j += b.ncols
    return out


def _rref_inplace(rows: list[list], ncols: int, field: Field) -> list[int]:
    """Row-reduce ``rows`` in place; returns the pivot columns.

    Pivots are searched among the first ``ncols`` columns only, but every
    column of the rows is updated (augmented systems).
    """
    p = field.characteristic
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        a = prow[c]
        if a != 1:
            if p:
                inv = pow(a, p - 2, p)
                prow = [(x * inv) % p for x in prow]
            else:
                prow = [x / a for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, len(prow)) if prow[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f == 0:
                continue
            if p:
                for j in nz:
                    row[j] = (row[j] - f * prow[j]) % p
            else:
                for j in nz:
                    row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns of ``m``."""
    rows = [r[:] for r in m.rows]
    pivots = _rref_inplace(rows, m.ncols, m.field)
    return Matrix(m.field, m.nrows, m.ncols, rows, _trusted=True), len(pivots), pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def nullspace_basis(m: Matrix) -> list[list]:
    """Basis of the right kernel, one vector per free column in increasing order."""
    rows = [r[:] for r in m.rows]
    pivots = _rref_inplace(rows, m.ncols, m.field)
    field = m.field
    p = field.characteristic
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = [field.zero] * m.ncols
        v[f] = field.one
        for i, c in enumerate(pivots):
            x = rows[i][f]
            if x != 0:
                v[c] = (-x) % p if p else -x
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence) -> list | None:
    """One solution of ``a @ x == b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero, giving the RREF particular solution.
    """
    if len(b) != a.nrows:
        raise InputError(f"right-hand side has length {len(b)}, expected {a.nrows}")
    field = a.field
    rows = [r[:] + [field(x)] for r, x in zip(a.rows, b)]
    pivots = _rref_inplace(rows, a.ncols + 1, field)
    if pivots and pivots[-1] == a.ncols:
        return None
    x = [field.zero] * a.ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][a.ncols]
    return x


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve ``a @ X == b`` column by column; ``None`` if any column is inconsistent."""
    if a.nrows != b.nrows:
        raise InputError("row count mismatch")
    field = a.field
    n = a.ncols
    rows = [r[:] + s[:] for r, s in zip(a.rows, b.rows)]
    pivots = _rref_inplace(rows, n, field)
    r = len(pivots)
    for i in range(r, a.nrows):
        if any(x != 0 for x in rows[i][n:]):
            return None
    out = Matrix.zeros(field, n, b.ncols)
    for i, c in enumerate(pivots):
        out.rows[c] = rows[i][n:]
    return out


def column_space(m: Matrix) -> list[list]:
    """Basis (as column vectors) of the column space, taken from the pivot columns of ``m``."""
    _, _, pivots = rref(m)
    return [m.column(j) for j in pivots]


def extend_to_basis(field: Field, vectors: Sequence[Sequence], dim: int) -> list[list]:
    """Standard basis vectors completing the independent ``vectors`` to a basis of ``field**dim``.

    Greedy in increasing coordinate order.
    """
    cols = [list(v) for v in vectors]
    k = len(cols)
    m = Matrix.from_columns(field, cols + [[field.one if i == j else field.zero for i in range(dim)] for j in range(dim)], dim)
    _, _, pivots = rref(m)
    if pivots[:k] != list(range(k)):
        raise ValueError("vectors are not linearly independent")
    return [[field.one if i == j - k else field.zero for i in range(dim)] for j in pivots[k:]]


def inverse(m: Matrix) -> Matrix | None:
    if m.nrows != m.ncols:
        raise InputError("inverse of a non-square matrix")
    return solve_matrix(m, Matrix.identity(m.field, m.nrows)) if m.rank() == m.nrows else None
