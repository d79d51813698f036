import math
import random

import pytest

import oracle
from conftest import a_n, poset
from quiverdim.algebra import Quiver, antichain, bound_quiver_algebra, chain, incidence_algebra, poset_from_covers
from quiverdim.corpus import CORPUS
from quiverdim.exceptions import InputError, ResourceCeilingError
from quiverdim.graph import (IndecGraph, diameter, dimension_vectors, enumerate_indecomposables, epsilon_reachable,
                             epsilon_steps, find_epsilon_certificate, fingerprint, hom_graph, random_module,
                             search_space_estimate, sincere_certificate)
from quiverdim.homology import ext_dim
from quiverdim.linalg import GF, QQ
from quiverdim.reps import are_isomorphic, fitting_decompose, is_indecomposable, is_sincere, simple_at

SMALL = [e for e in CORPUS if e.algebra().n <= 8]


def graph_of(a, bound=2, field=GF(2)):
    mods = enumerate_indecomposables(a, bound, field)
    return hom_graph(a.over(field), mods, dim_bound=bound)


def names(g):
    return [g.display(i) for i in range(g.n)]


def test_type_a2_path_algebra():
    q = Quiver.build(["a", "b"], [("x", "a", "b")])
    mods = enumerate_indecomposables(bound_quiver_algebra(q, []), 1)
    assert sorted(m.name for m in mods) == ["P_a=I_b", "S_a=I_a", "S_b=P_b"]


def test_one_point_only_simple():
    pt = incidence_algebra(poset_from_covers(["a"], []))
    for b in (1, 2, 3):
        assert [m.dims for m in enumerate_indecomposables(pt, b)] == [(1,)]


@pytest.mark.parametrize("n", [2, 3])
def test_a_n_graph(n):
    g = graph_of(a_n(n), 1)
    labels = {lab for i in range(g.n) for lab in g.labels(i)}
    assert g.n == 2 * n + 1
    assert {f"S_{i}" for i in range(n + 1)} | {f"P_{i}" for i in range(n)} <= labels
    assert diameter(g) == n + 1


def test_a2_edges():
    g = graph_of(a_n(2), 1)
    name = {i: next(l for l in g.labels(i) if l[0] in "SP" and l != "P_2") for i in range(g.n)}
    edges = {(name[i], name[j]) for i, j in g.non_loop_edges()}
    assert edges == {("P_1", "P_0"), ("P_0", "S_0"), ("P_1", "S_1"), ("S_1", "P_0"), ("S_2", "P_1")}


def test_a2_epsilon():
    g = graph_of(a_n(2), 1)
    s2 = next(i for i in range(g.n) if "S_2" in g.labels(i))
    assert epsilon_reachable(g, s2, (1, 1, 1)) == set(range(g.n))
    assert epsilon_reachable(g, s2, (1,)) == {s2} | {j for i, j in g.edges if i == s2}
    cert = find_epsilon_certificate(g, 4, "all")
    edges = g.edges
    ref = oracle.first_certificate(g.n, edges, 4, range(g.n))
    assert (cert.r, cert.signs, cert.source) == ref
    assert cert.gldim_bound >= 2


def test_complete_digraph_toy():
    g = IndecGraph([None, None, None], {(i, j): 1 for i in range(3) for j in range(3)})
    cert = find_epsilon_certificate(g, 3, "all")
    assert (cert.r, cert.signs, cert.source) == (1, (1,), 0)


def test_two_components_no_certificate():
    g = IndecGraph([None, None], {(0, 0): 1, (1, 1): 1, (0, 1): 0, (1, 0): 0})
    assert find_epsilon_certificate(g, 5, "all") is None
    assert diameter(g) == math.inf
    assert epsilon_reachable(g, 0, (1, -1, 1)) == {0}


def test_single_vertex_diameter():
    g = graph_of(incidence_algebra(poset_from_covers(["a"], [])))
    assert diameter(g) == 0


def test_antichain_graph():
    g = graph_of(incidence_algebra(antichain(3)))
    assert g.non_loop_edges() == [] and diameter(g) == math.inf
    assert all(g.hom[(i, i)] == 1 for i in range(g.n))


def test_epsilon_input_checks():
    g = graph_of(a_n(2), 1)
    with pytest.raises(InputError):
        epsilon_reachable(g, 99, (1,))
    with pytest.raises(InputError):
        epsilon_reachable(g, 0, (2,))


def test_sincere_certificates():
    assert sincere_certificate(a_n(2), enumerate_indecomposables(a_n(2), 2)) is None
    pt = incidence_algebra(poset_from_covers(["a"], []))
    m = sincere_certificate(pt, enumerate_indecomposables(pt, 1))
    assert m.dims == (1,)
    d = incidence_algebra(poset("t<l t<r l<b r<b"))
    assert is_sincere(sincere_certificate(d, []))


def test_enumeration_refuses_above_ceiling():
    a = next(e for e in CORPUS if e.name == "diamond-squared").algebra()
    with pytest.raises(ResourceCeilingError) as info:
        enumerate_indecomposables(a, 2)
    assert info.value.estimate > 0
    with pytest.raises(ResourceCeilingError):
        enumerate_indecomposables(next(e for e in CORPUS if e.name == "pdid4-X").algebra(), 2, ceiling=1000)


def test_enumeration_needs_prime_field():
    with pytest.raises(InputError):
        enumerate_indecomposables(a_n(2), 1, QQ)


def test_dimension_vectors_connected_and_sorted():
    a = incidence_algebra(poset("t<l t<r l<b r<b"))
    vecs = dimension_vectors(a, 2)
    assert vecs == sorted(vecs, key=lambda d: (sum(d), d))
    assert (1, 0, 0, 1) not in vecs and (1, 1, 0, 1) in vecs
    assert len(vecs) == len(set(vecs))


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.name)
def test_thin_modules_against_oracle(entry):
    a = entry.algebra()
    arrows = [(nm, a.vertices[s], a.vertices[t]) for nm, s, t in a.arrows]
    rels = [[(int(c), list(p)) for c, p in r.terms] for r in a.relations]
    assert len(enumerate_indecomposables(a, 1)) == oracle.thin_indecomposables(list(a.vertices), arrows, rels)


def _tits(a, bound):
    ext1 = {(i, j): ext_dim(simple_at(a, i), simple_at(a, j), 1) for i in range(a.n) for j in range(a.n)}
    ext2 = {(i, j): ext_dim(simple_at(a, i), simple_at(a, j), 2) for i in range(a.n) for j in range(a.n)}
    return oracle.tits_roots(a.n, {k: v for k, v in ext1.items() if v}, {k: v for k, v in ext2.items() if v}, bound)


@pytest.mark.parametrize("name", ["A2", "diamond", "D4-tree"])
def test_directed_algebras_match_tits_roots(name):
    a = next(e for e in CORPUS if e.name == name).algebra()
    mods = enumerate_indecomposables(a, 2)
    assert sorted(m.dims for m in mods) == _tits(a, 2)


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.name)
def test_enumeration_output_sound(entry):
    mods = enumerate_indecomposables(entry.algebra(), 2)
    assert [(m.total_dim, m.dims) for m in mods] == sorted((m.total_dim, m.dims) for m in mods)
    for m in mods:
        assert is_indecomposable(m)
        m.validate()
    for i, m in enumerate(mods):
        for n in mods[i + 1:]:
            if fingerprint(m) == fingerprint(n):
                assert not are_isomorphic(m, n, indecomposable=True)


@pytest.mark.parametrize("entry", SMALL, ids=lambda e: e.name)
def test_hom_graph_invariants(entry):
    a = entry.algebra()
    g = graph_of(a)
    for i in range(g.n):
        assert (i, i) in g.edges
        for q0 in (0, g.n - 1):
            layers = epsilon_steps(g, q0, (1, -1, 1, 1, -1))
            assert all(x <= y for x, y in zip(layers, layers[1:]))
    e_all = find_epsilon_certificate(g, 5, "all")
    e_simple = find_epsilon_certificate(g, 5, "simples")
    if e_all is not None:
        assert e_simple is not None and e_all.r >= e_simple.r
    d = diameter(g)
    ref = oracle.undirected_diameter(g.n, g.edges)
    assert d == ref
    for cert in (e_all, e_simple):
        if cert is not None:
            ref_cert = oracle.first_certificate(g.n, g.edges, 5,
                                                range(g.n) if cert.mode == "all" else g.simple_vertices())
            assert (cert.r, cert.signs, cert.source) == ref_cert


def test_graph_edges_invariant_under_input_order():
    a = next(e for e in CORPUS if e.name == "diamond").algebra()
    mods = enumerate_indecomposables(a, 2)
    g1 = hom_graph(mods[0].algebra, mods)
    rev = list(reversed(mods))
    g2 = hom_graph(mods[0].algebra, rev)
    assert len(g1.edges) == len(g2.edges)
    n = len(mods)
    assert {(i, j) for i, j in g1.edges} == {(n - 1 - i, n - 1 - j) for i, j in g2.edges}


def test_export_format():
    g = graph_of(a_n(2), 1)
    text = g.export()
    assert "Q0 -> Q0 dimHom=1" in text and text.startswith("# vertices")
    assert text == graph_of(a_n(2), 1).export()


def test_estimate_is_positive_and_deterministic():
    a = next(e for e in CORPUS if e.name == "final").algebra()
    assert search_space_estimate(a, 2, GF(2)) == search_space_estimate(a, 2, GF(2)) > 0


def test_random_modules_decompose_into_enumerated():
    a = next(e for e in CORPUS if e.name == "diamond").algebra().over(GF(2))
    mods = enumerate_indecomposables(a, 2)
    rng = random.Random(0)
    for _ in range(50):
        m = random_module(a, 2, rng)
        for part in fitting_decompose(m):
            assert any(are_isomorphic(part, x, indecomposable=True) for x in mods)


def test_enumeration_over_gf3():
    mods = enumerate_indecomposables(next(e for e in CORPUS if e.name == "D4-tree").algebra(), 2, GF(3))
    assert len(mods) == 12
