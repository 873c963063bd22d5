from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from metamour.graph import (
    INFINITE,
    Graph,
    build_graph,
    combine,
    complement,
    connected_components,
    diameter,
    distance_matrix,
    edgeless,
    induced_subgraph,
    is_connected,
    metamour,
)


def test_build_rejects_loops_and_range():
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])


def test_graph_is_immutable():
    G = edgeless(2)
    with pytest.raises(AttributeError):
        G.n = 3


def test_infinite_compares_above_ints():
    assert INFINITE > 10 ** 9
    assert not INFINITE < 3


def test_diameter_disconnected_is_infinite():
    assert diameter(edgeless(2)) is INFINITE
    assert diameter(edgeless(1)) == 0


def test_combine_join_and_union():
    K2 = build_graph(2, [(0, 1)])
    J = combine(edgeless(2), edgeless(2), "join")
    assert J.num_edges == 4
    U = combine(K2, K2)
    assert U.num_edges == 2 and len(connected_components(U)) == 2


@given(graphs())
def test_metamour_matches_networkx_distance_two(G):
    H = to_nx(G)
    lengths = dict(nx.all_pairs_shortest_path_length(H))
    expect = {(u, v) for u in range(G.n) for v in range(u + 1, G.n) if lengths[u].get(v) == 2}
    assert metamour(G).edge_set() == expect


@given(graphs())
def test_distances_match_networkx(G):
    H = to_nx(G)
    lengths = dict(nx.all_pairs_shortest_path_length(H))
    D = distance_matrix(G)
    for u in range(G.n):
        for v in range(G.n):
            assert D[u][v] == lengths[u].get(v, INFINITE)
    if nx.is_connected(H):
        assert diameter(G) == nx.diameter(H)
    else:
        assert diameter(G) is INFINITE


@given(graphs())
def test_components_match_networkx(G):
    ours = sorted(sorted(c) for c in connected_components(G))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(G)))
    assert ours == theirs
    assert is_connected(G) == nx.is_connected(to_nx(G))


@given(graphs())
def test_complement_is_involution(G):
    assert complement(complement(G)) == G
    assert G.num_edges + complement(G).num_edges == G.n * (G.n - 1) // 2


@given(graphs())
def test_metamour_has_no_edges_of_g(G):
    assert not (metamour(G).edge_set() & G.edge_set())


@given(graphs(min_n=2))
def test_induced_subgraph_keeps_edges(G):
    S = list(range(0, G.n, 2))
    H = induced_subgraph(G, S)
    for a, u in enumerate(S):
        for b, v in enumerate(S):
            assert H.has_edge(a, b) == (u != v and G.has_edge(u, v))
