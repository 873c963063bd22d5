from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from metamour.constructions import c5hat, cycle, generalized_petersen
from metamour.dynamics import metamour_iterate, orbit
from metamour.graph import build_graph, metamour
from metamour.walks import (
    TwoWalk,
    build_two_walk,
    d2_value,
    dyadic_triples,
    fm_parity_sets,
    fm_relation,
    fully_minimal_set,
    is_fully_minimal,
    iter_two_walks,
    min_vs_fully_minimal_witness,
    mk_edge_oracle,
    restrict,
    two_walk_exists,
    two_walk_pairs_bruteforce,
)


def test_dyadic_triples_level_two():
    assert sorted(dyadic_triples(2)) == [(0, 1, 2), (0, 2, 4), (2, 3, 4)]


def test_walk_validity_on_c5():
    # 0-1-2-3-4 on C5: 0,2 and 2,4 are metamours, and 0,2,4 are distinct
    good = TwoWalk(2, (0, 1, 2, 3, 4))
    assert good.is_valid(cycle(5))
    bad = TwoWalk(2, (0, 1, 2, 1, 0))
    assert not bad.is_valid(cycle(5))
    assert good.spans(1) == [(0, 2), (2, 4)]


@given(graphs(max_n=7), st.integers(1, 3))
def test_recursion_matches_bruteforce(G, k):
    R = fm_relation(G, max_level=k).R_at(k)
    rec = {(u, v) for u in range(G.n) for v in range(G.n) if R[u, v]}
    assert rec == two_walk_pairs_bruteforce(G, k)


@given(graphs(max_n=6), st.integers(1, 2))
def test_bruteforce_matches_dfs_enumeration(G, k):
    dfs = {(w.vertices[0], w.vertices[-1]) for u in range(G.n) for w in iter_two_walks(G, u, None, k)}
    assert dfs == two_walk_pairs_bruteforce(G, k)


@given(graphs(max_n=7))
def test_level_one_is_metamour(G):
    assert fully_minimal_set(G, 1) == metamour(G).edge_set()


@given(graphs(max_n=7), st.integers(1, 4))
def test_fm_inside_iterate(G, k):
    assert fully_minimal_set(G, k) <= metamour_iterate(G, k).edge_set()


@given(graphs(max_n=7))
def test_d2_is_least_level(G):
    rel = fm_relation(G)
    for u in range(G.n):
        for v in range(G.n):
            if u == v:
                continue
            d = d2_value(G, u, v, rel)
            levels = [k for k in range(1, len(rel.R) + 1) if two_walk_exists(G, u, v, k, rel)]
            assert d == (min(levels) if levels else None)


def test_two_walk_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        two_walk_exists(cycle(5), 1, 1, 2)
    with pytest.raises(ValueError):
        d2_value(cycle(5), 0, 0)


@pytest.mark.parametrize("G,kmax", [(cycle(7), 3), (c5hat(), 2), (generalized_petersen(6, 2), 3)])
def test_edge_oracle_matches_iteration(G, kmax):
    for k in range(kmax + 1):
        assert mk_edge_oracle(G, k) == metamour_iterate(G, k)


@given(graphs(max_n=6), st.integers(0, 3))
def test_edge_oracle_random(G, k):
    assert mk_edge_oracle(G, k) == metamour_iterate(G, k)


def test_edge_oracle_budget():
    with pytest.raises(RuntimeError):
        mk_edge_oracle(generalized_petersen(8, 2), 4, budget=10)


@pytest.mark.parametrize("m", [5, 6, 7, 8])
def test_parity_sets_equal_limits(m):
    G = generalized_petersen(m, 2)
    o = orbit(G)
    ps = fm_parity_sets(G, 40)
    limits = {(o.preperiod + i) % 2: H.edge_set() for i, H in enumerate(o.limit_set)}
    assert ps.confirmed
    assert ps.even == limits[0] and ps.odd == limits[1]


def test_fully_minimal_check_on_walks():
    G = generalized_petersen(7, 2)
    rel = fm_relation(G)
    F2 = fully_minimal_set(G, 2, rel)
    found = set()
    for u in range(G.n):
        for w in iter_two_walks(G, u, None, 2):
            if is_fully_minimal(w, rel):
                a, b = w.vertices[0], w.vertices[-1]
                found.add((min(a, b), max(a, b)))
    assert found == F2


def test_minimal_walk_that_is_not_fully_minimal():
    G = generalized_petersen(10, 2)
    rel = fm_relation(G)
    a, _ = min_vs_fully_minimal_witness(G)
    assert a is not None
    assert a.is_valid(G) and not is_fully_minimal(a, rel)
    assert d2_value(G, a.vertices[0], a.vertices[-1], rel) == a.level


def test_no_small_petersen_has_either_witness():
    for m in range(5, 10):
        assert min_vs_fully_minimal_witness(generalized_petersen(m, 2)) == (None, None)


def test_fully_minimal_walk_longer_than_minimal():
    # found by scanning connected graphs on 6 vertices
    G = build_graph(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (3, 5)])
    rel = fm_relation(G)
    _, b = min_vs_fully_minimal_witness(G)
    assert b is not None
    assert b.is_valid(G) and is_fully_minimal(b, rel)
    assert d2_value(G, b.vertices[0], b.vertices[-1], rel) < b.level


def test_restriction_property():
    for G in (generalized_petersen(7, 2), cycle(9), c5hat()):
        rel = fm_relation(G)
        for k in (2, 3):
            for u in range(G.n):
                for w in iter_two_walks(G, u, None, k):
                    if not is_fully_minimal(w, rel):
                        continue
                    for i in range(k):
                        for j in range((1 << k) >> (i + 1)):
                            sub = restrict(w, i, j)
                            assert sub.is_valid(G) and is_fully_minimal(sub, rel)


def test_restrict_bounds():
    w = TwoWalk(2, (0, 1, 2, 3, 4))
    assert restrict(w, 0, 1).vertices == (2, 3, 4)
    assert restrict(w, 1, 0) == w
    with pytest.raises(ValueError):
        restrict(w, 2, 0)


@given(graphs(max_n=8), st.integers(1, 3))
def test_built_walks_are_valid(G, k):
    rel = fm_relation(G, max_level=k)
    R, F = rel.R_at(k), rel.F_at(k)
    for u in range(G.n):
        for v in range(G.n):
            if u == v:
                continue
            w = build_two_walk(G, u, v, k, rel)
            assert (w is not None) == bool(R[u, v])
            if w is not None:
                assert w.is_valid(G)
            f = build_two_walk(G, u, v, k, rel, fully_minimal=True)
            assert (f is not None) == bool(F[u, v])
            if f is not None:
                assert is_fully_minimal(f, rel)


def test_spec_examples():
    C7 = cycle(7)
    assert two_walk_exists(C7, 0, 4, 2)
    assert d2_value(C7, 0, 1) == 3
    K2 = build_graph(2, [(0, 1)])
    assert d2_value(K2, 0, 1) is None
    assert fully_minimal_set(C7, 2) == metamour_iterate(C7, 2).edge_set()
    P = generalized_petersen(5, 2)
    assert P.edge_set() <= fully_minimal_set(P, 2)


def test_expansion_and_parity_on_petersen():
    for m in range(5, 10):
        G = generalized_petersen(m, 2)
        its = [metamour_iterate(G, k).edge_set() for k in range(8)]
        for k in range(1, 4):
            assert its[k] <= its[k + 2]
        for a in range(6):
            for b in range(a + 1, 6, 2):
                assert not its[a] & its[b]


def test_disconnected_input():
    G = build_graph(4, [(0, 1)])
    assert two_walk_pairs_bruteforce(G, 2) == frozenset()
