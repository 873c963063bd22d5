"""Iterated metamour (distance-2) graphs: constructions, orbits, 2-walks and theorem checks."""

from __future__ import annotations

from .canon import canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, subgraph_search
from .constructions import (
    PetersenSpec,
    c5hat,
    complete,
    cycle,
    embed_pseudo_period,
    embed_selfcomplementary,
    embed_with_period,
    generalized_petersen,
    join_along,
    join_power,
    mary_tree,
    paley,
    path,
    primitive,
    union_power,
    windmill,
)
from .dynamics import (
    OrbitBoundExceeded,
    OrbitReport,
    cycle_power_edges,
    metamour_iterate,
    metamour_period,
    mu,
    orbit,
    pseudo_metamour_period,
)
from .enumeration import count_graphs, enumerate_graphs
from .graph import (
    INFINITE,
    Graph,
    build_graph,
    complement,
    connected_components,
    diameter,
    distance_matrix,
    edgeless,
    induced_subgraph,
    is_connected,
    metamour,
)
from .graphio import decode_graph6, encode_graph6, export_dot, parse_graph_spec
from .verify import TheoremReport

__version__ = "0.1.0"

__all__ = [
    "canonical_form",
    "canonical_labeling",
    "find_isomorphism",
    "is_isomorphic",
    "subgraph_search",
    "PetersenSpec",
    "c5hat",
    "complete",
    "cycle",
    "embed_pseudo_period",
    "embed_selfcomplementary",
    "embed_with_period",
    "generalized_petersen",
    "join_along",
    "join_power",
    "mary_tree",
    "paley",
    "path",
    "primitive",
    "union_power",
    "windmill",
    "OrbitBoundExceeded",
    "OrbitReport",
    "cycle_power_edges",
    "metamour_iterate",
    "metamour_period",
    "mu",
    "orbit",
    "pseudo_metamour_period",
    "count_graphs",
    "enumerate_graphs",
    "INFINITE",
    "Graph",
    "build_graph",
    "complement",
    "connected_components",
    "diameter",
    "distance_matrix",
    "edgeless",
    "induced_subgraph",
    "is_connected",
    "metamour",
    "decode_graph6",
    "encode_graph6",
    "export_dot",
    "parse_graph_spec",
    "TheoremReport",
]
