import random

import pytest

from conftest import a_n, poset
from quiverdim.algebra import chain, incidence_algebra, poset_from_covers
from quiverdim.exceptions import InputError
from quiverdim.linalg import GF, QQ, Matrix
from quiverdim.reps import (Representation, are_isomorphic, constant_diagram, direct_sum, end_ring_analysis,
                            fitting_decompose, hom_basis, hom_dim, injective_at, is_homomorphism,
                            is_indecomposable, is_sincere, projective_at, simple_at)

DIAMOND = poset("t<l t<r l<b r<b")


def test_simple_and_hom():
    a = incidence_algebra(chain(2))
    s0, s1 = simple_at(a, "0"), simple_at(a, "1")
    assert s0.dims == (1, 0)
    assert hom_dim(s0, s0) == 1 and hom_dim(s0, s1) == 0


def test_unknown_vertex():
    with pytest.raises(InputError):
        simple_at(incidence_algebra(chain(2)), "nope")


def test_incidence_projectives_are_up_sets():
    a = incidence_algebra(DIAMOND)
    for x in DIAMOND.elements:
        p = projective_at(a, x)
        up = set(DIAMOND.up_set(x))
        assert p.dims == tuple(1 if y in up else 0 for y in DIAMOND.elements)
        for m in p.maps:
            assert m.nrows == 0 or m.ncols == 0 or m.rows == [[1]]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_n_projectives_and_injectives(n):
    a = a_n(n)
    assert are_isomorphic(projective_at(a, n), simple_at(a, n))
    assert are_isomorphic(injective_at(a, 0), simple_at(a, 0))
    for i in range(n):
        assert are_isomorphic(projective_at(a, i), injective_at(a, i + 1))


def test_constant_diagram():
    pt = incidence_algebra(poset_from_covers(["a"], []))
    assert are_isomorphic(constant_diagram(pt), simple_at(pt, "a"))
    k = constant_diagram(incidence_algebra(DIAMOND))
    assert is_indecomposable(k) and is_sincere(k)
    with pytest.raises(InputError):
        constant_diagram(a_n(2))


def test_relation_violation_rejected():
    a = incidence_algebra(DIAMOND)
    one = Matrix.from_rows(QQ, [[1]])
    zero = Matrix.from_rows(QQ, [[0]])
    maps = {"t->l": one, "t->r": one, "l->b": one, "r->b": zero}
    with pytest.raises(InputError):
        Representation.from_dict(a, {v: 1 for v in DIAMOND.elements}, maps)


def test_hom_basis_elements_are_homomorphisms():
    a = a_n(2)
    mods = [simple_at(a, i) for i in range(3)] + [projective_at(a, i) for i in range(3)]
    for m in mods:
        for n in mods:
            h = hom_basis(m, n)
            for phi in h.basis:
                assert is_homomorphism(phi, m, n)


def test_a2_hom_dimensions():
    a = a_n(2)
    p0, p1, s1 = projective_at(a, 0), projective_at(a, 1), simple_at(a, 1)
    assert hom_dim(p1, p0) == 1 and hom_dim(p0, p1) == 0 and hom_dim(s1, p0) == 1


def test_fitting_decompose_direct_sum():
    a = a_n(2)
    m = direct_sum(projective_at(a, 0), simple_at(a, 2))
    parts = fitting_decompose(m)
    assert len(parts) == 2
    assert sorted(p.dims for p in parts) == sorted([projective_at(a, 0).dims, simple_at(a, 2).dims])
    for target in (projective_at(a, 0), simple_at(a, 2)):
        assert any(are_isomorphic(p, target) for p in parts)


def test_end_of_double_simple_not_local():
    a = a_n(2)
    ss = direct_sum(simple_at(a, 1), simple_at(a, 1))
    res = end_ring_analysis(ss)
    assert res.dim_end == 4 and res.local is False
    assert not is_indecomposable(ss)


def test_isomorphism_of_sums_krull_schmidt():
    a = incidence_algebra(DIAMOND, GF(2))
    x = direct_sum(projective_at(a, "t"), simple_at(a, "l"), simple_at(a, "l"))
    y = direct_sum(simple_at(a, "l"), projective_at(a, "t"), simple_at(a, "l"))
    z = direct_sum(simple_at(a, "r"), projective_at(a, "t"), simple_at(a, "l"))
    assert are_isomorphic(x, y)
    assert not are_isomorphic(x, z)


def test_random_base_change_is_isomorphic():
    a = incidence_algebra(DIAMOND, GF(3))
    rng = random.Random(5)
    m = direct_sum(projective_at(a, "t"), injective_at(a, "b"))
    # conjugate every vector space by a random invertible matrix
    gs = []
    for d in m.dims:
        while True:
            g = Matrix.from_rows(GF(3), [[rng.randrange(3) for _ in range(d)] for _ in range(d)])
            if g.rank() == d:
                break
        gs.append(g)
    from quiverdim.linalg import inverse
    maps = [gs[t] @ f @ inverse(gs[s]) for f, (_, s, t) in zip(m.maps, a.arrows)]
    n = Representation(a, m.dims, maps)
    assert are_isomorphic(m, n)


def test_sincere():
    a = a_n(2)
    assert not any(is_sincere(projective_at(a, i)) for i in range(3))
    assert is_sincere(projective_at(incidence_algebra(chain(3)), "0"))
