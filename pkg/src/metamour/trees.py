"""Closed forms for metamour iterates of complete m-ary trees T(h, m).

Vertices use the breadth-first ids of :func:`constructions.mary_tree`: the
children of ``p`` are ``m*p + 1 .. m*p + m``.  A vertex is equivalently its
root path ``(c_1, ..., c_d)`` with ``c_i`` in ``range(m)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .constructions import mary_tree
from .graph import INFINITE, ExtendedDistance, Graph, _bits, bfs_layers, build_graph, connected_components, edgeless


@dataclass(frozen=True)
class TreeCoord:
    path: tuple

    @property
    def depth(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class PathProfile:
    """``p`` steps up to the lowest common ancestor, then ``q`` steps down."""

    p: int
    q: int

    @property
    def distance(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class SegmentIndex:
    """``S_i`` is the integer interval ``(2^(i-1), 2^i]``; ``S_0 = {1}``."""

    i: int

    @property
    def low(self) -> int:
        return 1 if self.i == 0 else 2 ** (self.i - 1) + 1

    @property
    def high(self) -> int:
        return 2 ** self.i

    def __contains__(self, s: int) -> bool:
        return self.low <= s <= self.high


def tree_size(h: int, m: int) -> int:
    return (m ** (h + 1) - 1) // (m - 1)


def _check_tree(h, m):
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if h < 1:
        raise ValueError(f"need h >= 1, got {h}")


def coord_to_id(m: int, coord: TreeCoord | Sequence[int]) -> int:
    path = coord.path if isinstance(coord, TreeCoord) else tuple(coord)
    d = len(path)
    v = (m ** d - 1) // (m - 1)
    for i, c in enumerate(path, start=1):
        if not 0 <= c < m:
            raise ValueError(f"child index {c} outside 0..{m - 1}")
        v += c * m ** (d - i)
    return v


def id_to_coord(m: int, v: int) -> TreeCoord:
    if v < 0:
        raise ValueError("vertex ids are nonnegative")
    path = []
    while v > 0:
        path.append((v - 1) % m)
        v = (v - 1) // m
    return TreeCoord(tuple(reversed(path)))


def depth(m: int, v: int) -> int:
    return id_to_coord(m, v).depth


def _coord(h, m, x):
    c = x if isinstance(x, TreeCoord) else id_to_coord(m, x)
    if c.depth > h or any(not 0 <= ci < m for ci in c.path):
        raise ValueError(f"{c} is not a vertex of T({h}, {m})")
    return c


def path_profile(h: int, m: int, x, y) -> PathProfile:
    """Up/down step counts of the tree path from ``x`` to ``y`` (ids or coords)."""
    cx, cy = _coord(h, m, x), _coord(h, m, y)
    lca = 0
    for a, b in zip(cx.path, cy.path):
        if a != b:
            break
        lca += 1
    return PathProfile(cx.depth - lca, cy.depth - lca)


def tree_distance(h: int, m: int, x, y) -> int:
    return path_profile(h, m, x, y).distance


def segment_index(s: int) -> SegmentIndex:
    """``i = ceil(log2 s)``, so that ``s`` lies in ``S_i``."""
    if s < 1:
        raise ValueError(f"segments cover positive integers, got {s}")
    return SegmentIndex((s - 1).bit_length())


def log2_ceil(h: int) -> int:
    return (h - 1).bit_length()


def m2_by_distance(h: int, m: int) -> Graph:
    """Graph on V(T) joining the pairs at tree distance exactly 4."""
    _check_tree(h, m)
    T = mary_tree(h, m)
    rows = []
    for v in range(T.n):
        layers = bfs_layers(T, v)
        rows.append(layers[4] if len(layers) > 4 else 0)
    return Graph._trusted(T.n, tuple(rows))


@lru_cache(maxsize=32)
def _m2_distances(h, m) -> np.ndarray:
    """M^2-distances as an int array, -1 across components."""
    G = m2_by_distance(h, m)
    out = np.full((G.n, G.n), -1, dtype=np.int64)
    for v in range(G.n):
        for d, layer in enumerate(bfs_layers(G, v)):
            for w in _bits(layer):
                out[v, w] = d
    return out


def m2_distance(h: int, m: int, x: int, y: int) -> ExtendedDistance:
    d = int(_m2_distances(h, m)[x, y])
    return INFINITE if d < 0 else d


@dataclass(frozen=True)
class M2Report:
    graph: Graph
    components: tuple
    diameters: tuple

    @property
    def max_diameter(self) -> int:
        return max(self.diameters)


def tree_m2_report(h: int, m: int) -> M2Report:
    """M^2(T) by iteration, checked against the distance-4 criterion."""
    from .dynamics import metamour_iterate

    if h < 5:
        raise ValueError(f"h = {h} < 5; use small_tree_expected")
    _check_tree(h, m)
    T = mary_tree(h, m)
    M2 = metamour_iterate(T, 2)
    if M2 != m2_by_distance(h, m):
        raise AssertionError(f"M^2(T({h},{m})) differs from the distance-4 graph")
    comps = connected_components(M2)
    dist = _m2_distances(h, m)
    diams = tuple(int(dist[np.ix_(c, c)].max()) for c in comps)
    return M2Report(M2, tuple(tuple(c) for c in comps), diams)


def is_exceptional_pair(h: int, m: int, x: int, y: int) -> bool:
    return m == 2 and h in (5, 6) and x != y and depth(m, x) == 1 and depth(m, y) == 1


def tree_mk_edge(h: int, m: int, x: int, y: int, k: int) -> bool:
    """Whether ``xy`` is an edge of M^k(T(h, m)), from M^2-distances alone."""
    if k < 2:
        raise ValueError("closed form needs k >= 2; use metamour for k < 2")
    if h < 5:
        raise ValueError(f"closed form needs h >= 5, got {h}")
    if x == y or is_exceptional_pair(h, m, x, y):
        return False
    d = m2_distance(h, m, x, y)
    if d is INFINITE:
        return False
    i = segment_index(d).i
    return i <= k - 2 and i % 2 == k % 2


def _graph_from_mask(mask: np.ndarray) -> Graph:
    mask = mask & ~np.eye(len(mask), dtype=bool)
    weights = 1 << np.arange(len(mask), dtype=object)
    return Graph._trusted(len(mask), tuple(int(weights[row].sum()) for row in mask))


def _segment_indices(h, m) -> np.ndarray:
    """ceil(log2 d) per pair, -1 for d = 0 or across components."""
    d = _m2_distances(h, m)
    out = np.full(d.shape, -1, dtype=np.int64)
    pos = d > 0
    out[pos] = np.ceil(np.log2(d[pos])).astype(np.int64)
    return out


def _exception_mask(h, m) -> np.ndarray:
    n = tree_size(h, m)
    mask = np.zeros((n, n), dtype=bool)
    if m == 2 and h in (5, 6):
        mask[1:3, 1:3] = True
    return mask


def tree_mk_graph(h: int, m: int, k: int) -> Graph:
    """M^k(T(h, m)) for h >= 5, k >= 2, built from the closed form."""
    if k < 2 or h < 5:
        raise ValueError("closed form needs h >= 5 and k >= 2")
    i = _segment_indices(h, m)
    mask = (i >= 0) & (i <= k - 2) & (i % 2 == k % 2) & ~_exception_mask(h, m)
    return _graph_from_mask(mask)


def _limit_graph(h, m, parity) -> Graph:
    i = _segment_indices(h, m)
    return _graph_from_mask((i >= 0) & (i % 2 == parity) & ~_exception_mask(h, m))


@dataclass(frozen=True)
class LimitProfile:
    start: int
    graphs: tuple

    def at(self, k: int) -> Graph:
        """The limit graph equal to M^k(T) for ``k >= start``."""
        if k < self.start:
            raise ValueError(f"k = {k} precedes the periodic range starting at {self.start}")
        return self.graphs[(k - self.start) % 2]


def tree_limit_profile(h: int, m: int) -> LimitProfile:
    """Onset ``ceil(log2 h)`` and the two limit graphs M^start, M^(start+1)."""
    if h < 5:
        raise ValueError(f"need h >= 5, got {h}")
    _check_tree(h, m)
    start = log2_ceil(h)
    return LimitProfile(start, (_limit_graph(h, m, start % 2), _limit_graph(h, m, (start + 1) % 2)))


def _cliques_on(n, groups) -> Graph:
    edges = [(a, b) for g in groups for i, a in enumerate(g) for b in g[i + 1:]]
    return build_graph(n, edges)


def _level(m, d):
    first = (m ** d - 1) // (m - 1)
    return list(range(first, first + m ** d))


def small_tree_onset(h: int, m: int) -> Optional[int]:
    """First k with M^k(T) = M^(k+2)(T) for h = 4; None for other small h."""
    if h == 4:
        return 4 if m == 2 else 6
    return None


def small_tree_expected(h: int, m: int, k: int) -> Optional[Graph]:
    """M^k(T(h, m)) for 1 <= h <= 4 as given by the small-height formulas.

    Returns None where those formulas say nothing (h = 3 with 1 <= k <= 4,
    h = 4 before the periodic range).
    """
    if not 1 <= h <= 4:
        raise ValueError(f"small-height formulas cover 1 <= h <= 4, got {h}")
    _check_tree(h, m)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = tree_size(h, m)
    if k == 0:
        return mary_tree(h, m)
    if h == 1:
        return _cliques_on(n, [_level(m, 1)]) if k == 1 else edgeless(n)
    if h == 2:
        kids, grand = _level(m, 1), _level(m, 2)
        families = [grand[i * m:(i + 1) * m] for i in range(m)]
        if k == 1:
            # children form K_m; root plus each sibling family forms K_{m+1}
            return _cliques_on(n, [kids] + [[0] + f for f in families])
        if k == 2:
            edges = [(a, b) for i, f in enumerate(families) for g in families[i + 1:] for a in f for b in g]
            return build_graph(n, edges)
        if k == 3:
            return _cliques_on(n, families)
        return edgeless(n)
    if h == 3:
        if k == 5:
            leaves = _level(m, 3)
            return _cliques_on(n, [leaves[i * m:(i + 1) * m] for i in range(m * m)])
        if k >= 6:
            return edgeless(n)
        return None
    if k < small_tree_onset(h, m):
        return None
    return _limit_graph(h, m, k % 2)


def tree_labels(h: int, m: int) -> list[str]:
    """Root-path labels: ``r`` for the root, else the child indices joined by dots."""
    return ["r" if v == 0 else ".".join(map(str, id_to_coord(m, v).path)) for v in range(tree_size(h, m))]


def witness_vertex(M3: Graph, x: int, y: int) -> Optional[int]:
    """Least z with xz and yz both edges of ``M3``."""
    common = M3.adj[x] & M3.adj[y]
    return next(_bits(common), None)
