"""Isomorph-free exhaustive generation of small graphs.

Graphs on ``n`` vertices are grown from the representatives on ``n - 1``
vertices by adding vertex ``n - 1`` with every neighbourhood ``S``
(canonical augmentation).  A child is kept only when

* ``S`` is the least subset in its orbit under the parent's automorphisms, and
* the new vertex belongs to the child's canonical deletion class: it has
  maximum degree, then maximum neighbour-degree sum, and among the vertices
  still tied its vertex-marked canonical form is least.

Each isomorphism class then appears exactly once.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import _canonical_search
from .graph import Graph, _bits, is_connected

MAX_ENUMERATION_N = 10


def _subset_orbit_minima(m, gens):
    size = 1 << m
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for S in range(size):
        for g in gens:
            T = 0
            for v in _bits(S):
                T |= 1 << g[v]
            a, b = find(S), find(T)
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(S) == S for S in range(size)]


def _marked_key(adj, n, v):
    color = [0] * n
    color[v] = 1
    return _canonical_search(adj, n, color)[0]


def _children(padj: tuple) -> list[tuple]:
    """Accepted one-vertex extensions of the parent with adjacency ``padj``."""
    m = len(padj)
    n = m + 1
    new_bit = 1 << m
    deg = [a.bit_count() for a in padj]
    dmax = max(deg, default=-1)
    degmask = [0] * (m + 2)
    for u, d in enumerate(deg):
        degmask[d] |= 1 << u
    top = degmask[dmax] if m else 0
    _, _, gens = _canonical_search(padj, m, [0] * m) if m else (None, None, [])
    allowed = _subset_orbit_minima(m, gens) if gens else None

    out = []
    for S in range(1 << m):
        if allowed is not None and not allowed[S]:
            continue
        s = S.bit_count()
        d_old = dmax + 1 if S & top else dmax
        if s < d_old:
            continue
        child = tuple([a | new_bit if S >> u & 1 else a for u, a in enumerate(padj)]) + (S,)
        if s == d_old:
            tied = (degmask[s] & ~S) | (degmask[s - 1] & S if s >= 1 else 0)
            cdeg = [d + (S >> u & 1) for u, d in enumerate(deg)]
            cdeg.append(s)
            own = sum(cdeg[u] for u in _bits(S))
            rivals = []
            rejected = False
            for u in _bits(tied):
                inv = sum(cdeg[w] for w in _bits(child[u]))
                if inv > own:
                    rejected = True
                    break
                if inv == own:
                    rivals.append(u)
            if rejected:
                continue
            if rivals:
                mine = _marked_key(child, n, m)
                if any(_marked_key(child, n, u) < mine for u in rivals):
                    continue
        out.append(child)
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple:
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    out = []
    for padj in _level(n - 1):
        out.extend(_children(padj))
    return tuple(out)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in a fixed order."""
    if n < 0 or n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}, got {n}")
    if n <= 8:
        source = _level(n)
    else:
        source = (child for padj in _level(n - 1) for child in _children(padj))
    for adj in source:
        G = Graph._trusted(n, adj)
        if connected_only and not is_connected(G):
            continue
        yield G


def count_graphs(n: int, connected_only: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(n, connected_only))
