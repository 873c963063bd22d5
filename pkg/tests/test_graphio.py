from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from metamour.constructions import c5hat, cycle, generalized_petersen, join_along, mary_tree, paley
from metamour.graph import complement, edgeless
from metamour.graphio import (
    GraphFormatError,
    decode_graph6,
    encode_graph6,
    export_dot,
    export_edgelist,
    parse_edgelist,
    parse_graph_spec,
    spec_labels,
)


def test_graph6_spec_examples():
    assert encode_graph6(edgeless(1)) == "@"
    assert decode_graph6(encode_graph6(cycle(5))) == cycle(5)
    assert encode_graph6(paley(13)).startswith("L")


@settings(max_examples=1000)
@given(graphs(max_n=20))
def test_graph6_round_trip(G):
    assert decode_graph6(encode_graph6(G)) == G


@given(graphs(max_n=20))
def test_graph6_matches_networkx(G):
    expect = nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()
    assert encode_graph6(G) == expect
    assert decode_graph6(">>graph6<<" + expect) == G


@pytest.mark.parametrize("bad", ["", "C~~", "Bw?", "A" + chr(200), "Ao"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        decode_graph6(bad)


def test_graph6_size_limit():
    with pytest.raises(GraphFormatError):
        encode_graph6(edgeless(63))


def _dot_counts(text):
    lines = [ln.strip() for ln in text.splitlines()]
    edges = sum("--" in ln for ln in lines)
    nodes = sum(ln.endswith(";") and "--" not in ln for ln in lines)
    return nodes, edges


def test_dot_examples():
    assert _dot_counts(export_dot(edgeless(2))) == (2, 0)
    assert _dot_counts(export_dot(c5hat())) == (6, 7)
    text = export_dot(generalized_petersen(5, 2), spec_labels("petersen:5,2"))
    assert 'label="v0"' in text and 'label="u4"' in text
    assert _dot_counts(text) == (10, 15)
    with pytest.raises(ValueError):
        export_dot(cycle(5), ["a"])


@given(graphs(max_n=12))
def test_edgelist_round_trip(G):
    assert parse_edgelist(export_edgelist(G)) == G


def test_edgelist_header_mismatch():
    with pytest.raises(GraphFormatError):
        parse_edgelist("3 2\n0 1\n")


def test_spec_language():
    assert parse_graph_spec("cycle:7") == cycle(7)
    assert parse_graph_spec("c5hat") == c5hat()
    assert parse_graph_spec("petersen:5,2") == generalized_petersen(5, 2)
    assert parse_graph_spec("tree:3,2") == mary_tree(3, 2)
    assert parse_graph_spec("complement:cycle:5") == complement(cycle(5))
    assert parse_graph_spec("g6:" + encode_graph6(c5hat())) == c5hat()
    G = parse_graph_spec("joinalong:cycle:5;edgeless:1,(petersen:5,2),complete:2,edgeless:1,g6:@")
    assert G.n == 15
    assert G == join_along(cycle(5), [edgeless(1), generalized_petersen(5, 2),
                                      parse_graph_spec("complete:2"), edgeless(1), edgeless(1)])


@pytest.mark.parametrize("bad", ["nope:3", "cycle", "cycle:x", "petersen:5", "joinalong:cycle:5", "paley:7"])
def test_spec_errors(bad):
    with pytest.raises(ValueError):
        parse_graph_spec(bad)


def test_tree_labels_in_spec():
    assert spec_labels("tree:2,2")[0] == "r"
    assert spec_labels("cycle:5") is None
