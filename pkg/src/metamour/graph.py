"""Immutable labeled simple graphs stored as per-vertex bitsets.

Vertex ``v`` of a graph on ``n`` vertices is the integer ``v`` in ``range(n)``;
``adj[v]`` is an int whose bit ``w`` is set iff ``vw`` is an edge.  Equality is
labeled equality: same ``n`` and identical adjacency.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence, Union


class Infinite(enum.Enum):
    """Distance between vertices in different components."""

    INFINITE = "inf"

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "INFINITE"

    __str__ = __repr__


INFINITE = Infinite.INFINITE

ExtendedDistance = Union[int, Infinite]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        adj = tuple(int(a) for a in adj)
        if n < 0 or len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in _bits(row):
                if not adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple) -> "Graph":
        # Skips validation; callers guarantee a symmetric, loop-free tuple of ints.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given (deduplicated) edge list."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    for x, y in edges:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError(f"edge ({x}, {y}) has a vertex outside 0..{n - 1}")
        if x == y:
            raise ValueError(f"self-loop ({x}, {y}) is not allowed")
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    return Graph._trusted(n, tuple(adj))


def edgeless(n: int) -> Graph:
    return Graph._trusted(n, (0,) * n)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph._trusted(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))


def combine(G1: Graph, G2: Graph, mode: str = "union") -> Graph:
    """Disjoint union or join; ``G2`` is shifted past the vertices of ``G1``."""
    if mode not in ("union", "join"):
        raise ValueError(f"unknown combine mode {mode!r}")
    n1, n2 = G1.n, G2.n
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    join = mode == "join"
    adj = [row | high if join else row for row in G1.adj]
    adj += [(row << n1) | low if join else row << n1 for row in G2.adj]
    return Graph._trusted(n1 + n2, tuple(adj))


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``, relabeled in ascending original order."""
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for w in _bits(G.adj[v]):
            i = pos.get(w)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph._trusted(len(verts), tuple(adj))


def bfs_layers(G: Graph, source: int) -> list[int]:
    """Bitmask of each BFS layer from ``source``; layer ``d`` holds distance-``d`` vertices."""
    adj = G.adj
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def distances_from(G: Graph, source: int) -> list[ExtendedDistance]:
    dist: list[ExtendedDistance] = [INFINITE] * G.n
    for d, layer in enumerate(bfs_layers(G, source)):
        for v in _bits(layer):
            dist[v] = d
    return dist


def distance_matrix(G: Graph) -> list[list[ExtendedDistance]]:
    return [distances_from(G, s) for s in range(G.n)]


def diameter(G: Graph) -> ExtendedDistance:
    if G.n == 0:
        return 0
    full = (1 << G.n) - 1
    best = 0
    for s in range(G.n):
        layers = bfs_layers(G, s)
        reached = 0
        for layer in layers:
            reached |= layer
        if reached != full:
            return INFINITE
        best = max(best, len(layers) - 1)
    return best


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    remaining = (1 << G.n) - 1
    comps = []
    while remaining:
        low = remaining & -remaining
        s = low.bit_length() - 1
        comp = 0
        for layer in bfs_layers(G, s):
            comp |= layer
        comps.append(list(_bits(comp)))
        remaining &= ~comp
    return comps


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    comp = 0
    for layer in bfs_layers(G, 0):
        comp |= layer
    return comp == (1 << G.n) - 1


def metamour(G: Graph) -> Graph:
    """The metamour (2-distance) graph: ``xy`` is an edge iff ``d_G(x, y) = 2``."""
    adj = G.adj
    out = []
    for v, row in enumerate(adj):
        reach = 0
        r = row
        while r:
            low = r & -r
            reach |= adj[low.bit_length() - 1]
            r ^= low
        out.append(reach & ~row & ~(1 << v))
    return Graph._trusted(G.n, tuple(out))
