from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from metamour import trees as tr
from metamour.canon import is_isomorphic
from metamour.constructions import complete, join_power, mary_tree, union_power, windmill
from metamour.dynamics import metamour_iterate, orbit
from metamour.graph import INFINITE, combine, connected_components, edgeless
from metamour.walks import d2_value


def segment(i):
    s = tr.SegmentIndex(i)
    return set(range(s.low, s.high + 1))


def test_segments():
    assert segment(0) == {1} and segment(1) == {2} and segment(3) == {5, 6, 7, 8}
    assert [tr.segment_index(s).i for s in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
    with pytest.raises(ValueError):
        tr.segment_index(0)


@pytest.mark.parametrize("i", range(1, 11))
def test_segment_sums(i):
    if i == 2:
        return
    parts = segment(1 if i % 2 == 0 else 0) | segment(i - 1)
    sums = {a + b for a in parts for b in parts}
    assert segment(i) <= sums


@pytest.mark.parametrize("ell", range(1, 11))
def test_segment_union_sums(ell):
    for parity in (0, 1):
        target = set().union(*(segment(i) for i in range(ell + 1) if i % 2 == parity)) - {1, 3}
        parts = set().union(*(segment(i) for i in range(ell) if i % 2 != parity))
        sums = {a + b for a in parts for b in parts}
        assert target <= sums


@given(st.integers(2, 4), st.integers(0, 5), st.data())
def test_coordinates_round_trip(m, d, data):
    path = tuple(data.draw(st.lists(st.integers(0, m - 1), min_size=d, max_size=d)))
    v = tr.coord_to_id(m, path)
    assert tr.id_to_coord(m, v).path == path
    assert tr.depth(m, v) == d


@pytest.mark.parametrize("h,m", [(3, 2), (4, 3), (5, 2)])
def test_tree_distance_matches_bfs(h, m):
    from metamour.graph import distance_matrix

    D = distance_matrix(mary_tree(h, m))
    n = tr.tree_size(h, m)
    for x in range(0, n, 3):
        for y in range(n):
            assert tr.tree_distance(h, m, x, y) == D[x][y]


@pytest.mark.parametrize("h,m", [(5, 2), (5, 3), (6, 2), (7, 2)])
def test_m2_is_distance_four(h, m):
    assert metamour_iterate(mary_tree(h, m), 2) == tr.m2_by_distance(h, m)


@pytest.mark.parametrize("h,m", [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2), (8, 2)])
def test_m2_components_and_diameters(h, m):
    r = tr.tree_m2_report(h, m)
    assert len(r.components) == 2
    for comp in r.components:
        assert len({tr.depth(m, v) % 2 for v in comp}) == 1
    assert r.max_diameter == -(-h // 2)


def test_m2_distance_across_components():
    assert tr.m2_distance(5, 2, 0, 1) is INFINITE
    assert tr.m2_distance(5, 2, 1, 2) == 3


@pytest.mark.parametrize("h,m", [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2), (7, 3)])
def test_closed_form_matches_iteration(h, m):
    o = orbit(mary_tree(h, m))
    for k in range(2, 8):
        assert tr.tree_mk_graph(h, m, k) == o.iterate(k)


def test_per_pair_edge_matches_graph():
    h, m = 6, 2
    for k in (2, 3, 4, 5):
        M = tr.tree_mk_graph(h, m, k)
        for x in range(tr.tree_size(h, m)):
            for y in range(x + 1, tr.tree_size(h, m)):
                assert tr.tree_mk_edge(h, m, x, y, k) == M.has_edge(x, y)


@pytest.mark.parametrize("h", [5, 6])
def test_exceptional_pair(h):
    o = orbit(mary_tree(h, 2))
    assert tr.is_exceptional_pair(h, 2, 1, 2)
    assert not tr.is_exceptional_pair(7, 2, 1, 2)
    assert not tr.is_exceptional_pair(h, 3, 1, 2)
    for k in range(2, 10):
        assert not o.iterate(k).has_edge(1, 2)
        assert not tr.tree_mk_edge(h, 2, 1, 2, k)


def test_exception_is_needed():
    # the bare parity rule would join the depth-1 pair at every even k >= 4
    for h in (5, 6):
        i = tr.segment_index(tr.m2_distance(h, 2, 1, 2)).i
        assert i % 2 == 0 and i <= 2
    o = orbit(mary_tree(7, 2))
    i = tr.segment_index(tr.m2_distance(7, 2, 1, 2)).i
    for k in range(2, 8):
        assert o.iterate(k).has_edge(1, 2) == (i <= k - 2 and i % 2 == k % 2)


@pytest.mark.parametrize("h,m", [(5, 2), (5, 3), (6, 2), (7, 2), (8, 2), (9, 2)])
def test_limit_onset(h, m):
    o = orbit(mary_tree(h, m))
    lp = tr.tree_limit_profile(h, m)
    assert o.period == 2
    assert o.preperiod == lp.start == tr.log2_ceil(h)
    assert lp.at(lp.start) == o.iterate(lp.start)
    assert lp.at(lp.start + 1) == o.iterate(lp.start + 1)
    with pytest.raises(ValueError):
        lp.at(lp.start - 1)


def test_onset_for_five_two():
    o = orbit(mary_tree(5, 2))
    assert o.iterate(3) == o.iterate(5)
    assert o.iterate(2) != o.iterate(4)


@pytest.mark.parametrize("h,m", [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2), (7, 3)])
def test_common_m3_neighbour(h, m):
    M3 = metamour_iterate(mary_tree(h, m), 3)
    D = tr._m2_distances(h, m)
    n = tr.tree_size(h, m)
    for x in range(n):
        for y in range(x + 1, n):
            if D[x, y] == 1 or (D[x, y] == 3 and not tr.is_exceptional_pair(h, m, x, y)):
                z = tr.witness_vertex(M3, x, y)
                assert z is not None and M3.has_edge(x, z) and M3.has_edge(y, z)


def test_distance_four_pair_has_two_walk_of_length_two():
    T = mary_tree(5, 2)
    x, y = 3, 5  # two grandchildren of the root in different subtrees
    assert tr.tree_distance(5, 2, x, y) == 4
    assert d2_value(T, x, y) == 2


def test_small_height_validation():
    with pytest.raises(ValueError):
        tr.small_tree_expected(5, 2, 1)
    with pytest.raises(ValueError):
        tr.tree_mk_edge(4, 2, 1, 2, 3)
    with pytest.raises(ValueError):
        tr.tree_mk_graph(5, 2, 1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_small_heights_one_and_two(m):
    for h in (1, 2):
        o = orbit(mary_tree(h, m))
        for k in range(0, 9):
            assert tr.small_tree_expected(h, m, k) == o.iterate(k)
    n = tr.tree_size(2, m)
    assert n == m * m + m + 1
    M = orbit(mary_tree(2, m))
    assert is_isomorphic(M.iterate(1), combine(complete(m), windmill(m + 1, copies=m)))
    assert is_isomorphic(M.iterate(2), combine(join_power(edgeless(m), m), edgeless(m + 1)))
    assert is_isomorphic(M.iterate(3), combine(union_power(complete(m), m), edgeless(m + 1)))


@pytest.mark.parametrize("m", [3, 4])
def test_height_three_formula(m):
    o = orbit(mary_tree(3, m))
    for k in range(5, 9):
        assert tr.small_tree_expected(3, m, k) == o.iterate(k)


def test_height_three_binary_observed():
    # the sibling-leaf cliques are already gone at M^4 for the binary tree
    o = orbit(mary_tree(3, 2))
    assert o.iterate(4) == edgeless(15)
    assert o.iterate(5) == edgeless(15)


@pytest.mark.parametrize("m,onset", [(2, 4), (3, 6), (4, 6)])
def test_height_four_onset(m, onset):
    o = orbit(mary_tree(4, m))
    assert o.period == 2 and o.preperiod == onset == tr.small_tree_onset(4, m)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_height_four_limit_observed(m):
    # the parity rule holds on the even-depth M^2 component; the odd-depth
    # component ends edgeless in both limit graphs
    o = orbit(mary_tree(4, m))
    even = [c for c in connected_components(tr.m2_by_distance(4, m)) if len(c) > 1 and tr.depth(m, c[0]) % 2 == 0][0]
    odd = [v for v in range(tr.tree_size(4, m)) if tr.depth(m, v) % 2 == 1]
    for k in (o.preperiod, o.preperiod + 1):
        got, rule = o.iterate(k), tr.small_tree_expected(4, m, k)
        for x in even:
            for y in even:
                if x < y:
                    assert got.has_edge(x, y) == rule.has_edge(x, y)
        assert not any(got.adj[v] for v in odd)


def test_labels():
    labels = tr.tree_labels(2, 2)
    assert labels[:4] == ["r", "0", "1", "0.0"]
