from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from quiverdim.exceptions import InputError
from quiverdim.linalg import GF, QQ, Field, Matrix, inverse, nullspace_basis, rank, rref, solve


def M(rows, field=QQ):
    return Matrix.from_rows(field, rows)


def test_rref_identity():
    r, k, piv = rref(Matrix.identity(QQ, 2))
    assert r == Matrix.identity(QQ, 2) and k == 2 and piv == [0, 1]


def test_rref_zero():
    r, k, piv = rref(Matrix.zeros(QQ, 3, 4))
    assert r == Matrix.zeros(QQ, 3, 4) and k == 0 and piv == []


def test_rref_rank_one():
    r, k, _ = rref(M([[2, 4], [1, 2]]))
    assert r.rows == [[1, 2], [0, 0]] and k == 1


def test_nullspace_examples():
    assert nullspace_basis(Matrix.identity(QQ, 3)) == []
    assert len(nullspace_basis(Matrix.zeros(QQ, 2, 3))) == 3
    assert nullspace_basis(M([[1, 1]], GF(2))) == [[1, 1]]


def test_solve_examples():
    b = [Fraction(3), Fraction(-1)]
    assert solve(Matrix.identity(QQ, 2), b) == b
    assert solve(Matrix.zeros(QQ, 2, 2), [1, 0]) is None
    assert solve(M([[1, 2], [3, 4]]), [1, 1]) == [-1, 1]
    with pytest.raises(InputError):
        solve(M([[1, 2]]), [1, 1])


def test_field_limits():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(257)
    assert Field.parse("gf3") == GF(3) and Field.parse("Q") == QQ


def test_rationals_lowest_terms():
    m = M([["2/4", 3]])
    assert m.rows[0][0] == Fraction(1, 2)


def test_inverse_gf():
    a = M([[1, 1], [0, 1]], GF(3))
    assert a @ inverse(a) == Matrix.identity(GF(3), 2)


small = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_matches_sympy(rows):
    r, k, piv = rref(M(rows))
    ref, ref_piv = oracle.sympy_rref(rows)
    assert piv == ref_piv and k == len(ref_piv)
    assert [[Fraction(int(v.p), int(v.q)) for v in row] for row in ref] == r.rows


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(rows):
    r = rref(M(rows))[0]
    assert rref(r)[0] == r


@settings(max_examples=60, deadline=None)
@given(matrices(), st.sampled_from([QQ, GF(2), GF(3), GF(5)]))
def test_nullspace_vectors_are_kernel(rows, field):
    m = M(rows, field)
    basis = nullspace_basis(m)
    assert len(basis) == m.ncols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.sampled_from([QQ, GF(2), GF(7)]))
def test_rank_of_transpose(rows, field):
    m = M(rows, field)
    assert rank(m) == rank(m.transpose())


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), st.sampled_from([GF(2), GF(3)]))
def test_gf_rank_matches_brute_force(rows, field):
    m = M(rows, field)
    assert rank(m) == oracle.gf_rank(m.rows, field.characteristic)
    assert field.characteristic ** (m.ncols - rank(m)) == oracle.gf_kernel_size(m.rows, m.ncols, field.characteristic)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_is_exact(rows, rhs):
    m = M(rows)
    b = rhs[:m.nrows] + [0] * (m.nrows - len(rhs[:m.nrows]))
    x = solve(m, b)
    if x is not None:
        assert m.apply(x) == [Fraction(v) for v in b]
    else:
        aug = M([row + [v] for row, v in zip(rows, b)])
        assert rank(aug) > rank(m)
