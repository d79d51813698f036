import pytest
from hypothesis import given, settings, strategies as st
import warnings

import oracle
from conftest import a_n, poset
from quiverdim.algebra import antichain, chain, incidence_algebra, opposite, poset_from_covers
from quiverdim.corpus import CORPUS
from quiverdim.exceptions import UndeterminedError
from quiverdim.algebra import Quiver, Relation, bound_quiver_algebra
from quiverdim.homology import (Dimension, check_complex, check_exact, check_minimal, ext_dim, gldim, injd,
                                minimal_resolution, projd)
from quiverdim.linalg import GF
from quiverdim.reps import are_isomorphic, constant_diagram, projective_at, simple_at

POSETS = [e for e in CORPUS if e.poset is not None]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_n_dimensions(n):
    a = a_n(n)
    assert gldim(a) == Dimension.finite(n)
    for i in range(n + 1):
        assert projd(simple_at(a, i)) == Dimension.finite(n - i)
        assert injd(simple_at(a, i)) == Dimension.finite(i)
    for i in range(n):
        assert projd(projective_at(a, i)) == Dimension.finite(0)
        assert injd(projective_at(a, i)) == Dimension.finite(0)


def test_projective_resolution_length_zero():
    a = incidence_algebra(poset("t<l t<r l<b r<b"))
    assert minimal_resolution(projective_at(a, "t")).length == Dimension.finite(0)


@pytest.mark.parametrize("n", [2, 3])
def test_first_syzygy_of_simple(n):
    a = a_n(n)
    for i in range(n):
        res = minimal_resolution(simple_at(a, i))
        assert are_isomorphic(res.syzygies[1], simple_at(a, i + 1))
        assert res.multiplicities(0)[i] == 1


def test_ext_examples():
    a = a_n(2)
    assert ext_dim(simple_at(a, 0), simple_at(a, 1), 1) == 1
    assert ext_dim(simple_at(a, 1), simple_at(a, 2), 1) == 1
    assert ext_dim(simple_at(a, 0), simple_at(a, 2), 2) == 1
    for i in range(1, 4):
        assert ext_dim(projective_at(a, 0), simple_at(a, 1), i) == 0
    assert ext_dim(simple_at(a, 0), simple_at(a, 0), 0) == 1


def test_pdid4_middle():
    e = next(e for e in CORPUS if e.name == "pdid4-X")
    a = e.algebra()
    assert projd(simple_at(a, "x")) == Dimension.finite(2)
    assert injd(simple_at(a, "x")) == Dimension.finite(2)


def test_final_self_ext():
    a = next(e for e in CORPUS if e.name == "final").algebra()
    k = constant_diagram(a)
    assert [ext_dim(k, k, i) for i in range(4)] == [1, 0, 1, 0]


def test_infinite_projective_dimension():
    q = Quiver.build(["v"], [("l", "v", "v")])
    a = bound_quiver_algebra(q, [Relation.monomial("l", "l")])
    s = simple_at(a, "v")
    assert projd(s) == Dimension.infinite()
    assert gldim(a).kind == "infinite"
    assert ext_dim(s, s, 1) == 1


def test_cutoff_lower_bound_and_undetermined():
    a = a_n(5)
    s = simple_at(a, 0)
    assert projd(s, cutoff=2) == Dimension.at_least(3)
    with pytest.raises(UndeterminedError):
        ext_dim(s, simple_at(a, 5), 5, cutoff=2)


def test_global_dimension_extremes():
    assert gldim(incidence_algebra(antichain(3))) == Dimension.finite(0)
    assert gldim(incidence_algebra(poset("u<c v<c c<w"))) == Dimension.finite(1)


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_resolution_checks_on_simples(entry):
    a = entry.algebra()
    for x in range(a.n):
        res = minimal_resolution(simple_at(a, x))
        assert check_complex(res) and check_exact(res) and check_minimal(res)
        for i in range(res.known_terms):
            mult = res.multiplicities(i)
            for y in range(a.n):
                assert ext_dim(simple_at(a, x), simple_at(a, y), i) == mult[y]


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_gldim_of_opposite(entry):
    a = entry.algebra()
    assert gldim(a) == gldim(opposite(a))


@pytest.mark.parametrize("entry", CORPUS, ids=lambda e: e.name)
def test_projd_is_top_nonvanishing_ext(entry):
    a = entry.algebra()
    for x in range(a.n):
        s = simple_at(a, x)
        pd = projd(s)
        top = max((i for i in range(pd.value + 2) for y in range(a.n) if ext_dim(s, simple_at(a, y), i)), default=0)
        assert top == pd.value


@pytest.mark.parametrize("entry", POSETS, ids=lambda e: e.name)
def test_gldim_against_order_complex_oracle(entry):
    p = entry.poset
    els, cov = list(p.elements), list(p.covers)
    a = entry.algebra()
    assert gldim(a).value == oracle.gldim(els, cov)
    for x in els:
        assert projd(simple_at(a, x)).value == oracle.projd_simple(els, cov, x)
        assert injd(simple_at(a, x)).value == oracle.injd_simple(els, cov, x)


@pytest.mark.parametrize("entry", [e for e in POSETS if len(e.poset) <= 8], ids=lambda e: e.name)
def test_ext_between_simples_against_oracle(entry):
    p = entry.poset
    els, cov = list(p.elements), list(p.covers)
    a = entry.algebra()
    for x in els:
        for y in els:
            for i in range(5):
                assert ext_dim(simple_at(a, x), simple_at(a, y), i) == oracle.ext_simples(els, cov, x, y, i)


@pytest.mark.parametrize("entry", POSETS, ids=lambda e: e.name)
def test_constant_diagram_ext_against_oracle(entry):
    p = entry.poset
    a = entry.algebra()
    k = constant_diagram(a)
    for i in range(4):
        assert ext_dim(k, k, i) == oracle.ext_constant(list(p.elements), list(p.covers), i)


def test_prime_field_agrees_on_corpus():
    for e in CORPUS:
        assert gldim(e.algebra(GF(2))) == gldim(e.algebra())


@st.composite
def random_posets(draw):
    n = draw(st.integers(1, 6))
    names = [f"p{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return poset_from_covers(names, chosen)


def _has_parallel_paths(p):
    # two different Hasse paths between the same pair
    count = {}
    for x in p.elements:
        paths = {x: 1}
        order = [y for y in p.elements if p.leq(x, y)]
        order.sort(key=lambda y: len(p.down_set(y)))
        for y in order:
            if y == x:
                continue
            paths[y] = sum(paths.get(z, 0) for z, w in p.covers if w == y and p.leq(x, z))
            if paths[y] > 1:
                return True
    return False


@settings(max_examples=30, deadline=None)
@given(random_posets())
def test_gldim_properties_random_posets(p):
    a = incidence_algebra(p)
    g = gldim(a).value
    assert (g == 0) == p.is_antichain()
    assert (g <= 1) == (not _has_parallel_paths(p))
    assert g == oracle.gldim(list(p.elements), list(p.covers))
    assert g == gldim(opposite(a)).value
    for x in range(a.n):
        res = minimal_resolution(simple_at(a, x))
        assert check_complex(res) and check_exact(res) and check_minimal(res)
