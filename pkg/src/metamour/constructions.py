"""Builders for the graph families used throughout the package.

Vertex numbering is fixed and documented per builder so that labeled
equality (which metamour periods depend on) is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .graph import Graph, build_graph, combine, complement, edgeless


class UnsupportedFieldError(ValueError):
    """Paley graphs over fields of non-prime order are not implemented."""


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"a path needs at least 1 vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return complement(edgeless(n))


def c5hat() -> Graph:
    """C5 on 0..4 plus vertex 5 adjacent to the cycle edge 0-1."""
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1)])


_PRIMITIVES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "edgeless": edgeless,
}


def primitive(kind: str, n: int = 0) -> Graph:
    if kind == "c5hat":
        return c5hat()
    try:
        builder = _PRIMITIVES[kind]
    except KeyError:
        raise ValueError(f"unknown primitive {kind!r}") from None
    return builder(n)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _prime_power_base(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return None


def quadratic_residues(q: int) -> frozenset:
    return frozenset(x * x % q for x in range(1, q))


def paley(q: int) -> Graph:
    """Paley graph on Z/q for a prime ``q = 1 (mod 4)``."""
    if q % 4 != 1:
        raise ValueError(f"Paley graphs need q = 1 mod 4, got {q}")
    if not _is_prime(q):
        if q > 1 and _prime_power_base(q) is not None:
            raise UnsupportedFieldError(f"unsupported field: q = {q} is a proper prime power")
        raise ValueError(f"q = {q} is not prime")
    squares = quadratic_residues(q)
    return build_graph(q, [(x, y) for x in range(q) for y in range(x + 1, q) if (y - x) % q in squares])


@dataclass(frozen=True)
class PetersenSpec:
    """Parameters of G(m, j): v_i -> i and u_i -> m + i."""

    m: int
    j: int

    def __post_init__(self):
        if self.m < 5:
            raise ValueError(f"generalized Petersen graphs need m >= 5, got {self.m}")
        if not 1 <= self.j or 2 * self.j >= self.m:
            raise ValueError(f"need 1 <= j < m/2, got m={self.m}, j={self.j}")

    def exterior(self, i: int) -> int:
        return i % self.m

    def interior(self, i: int) -> int:
        return self.m + i % self.m

    @property
    def interior_cycles(self) -> int:
        return gcd(self.m, self.j)

    def labels(self) -> list[str]:
        return [f"v{i}" for i in range(self.m)] + [f"u{i}" for i in range(self.m)]


def generalized_petersen(m: int, j: int) -> Graph:
    spec = PetersenSpec(m, j)
    edges = []
    for i in range(m):
        edges.append((spec.exterior(i), spec.exterior(i + 1)))
        edges.append((spec.exterior(i), spec.interior(i)))
        edges.append((spec.interior(i), spec.interior(i + j)))
    return build_graph(2 * m, edges)


def mary_tree(h: int, m: int) -> Graph:
    """Complete m-ary tree of height h; root is 0, children numbered breadth-first."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if h < 0:
        raise ValueError(f"need h >= 0, got {h}")
    n = (m ** (h + 1) - 1) // (m - 1)
    internal = (m ** h - 1) // (m - 1)
    edges = [(p, m * p + c) for p in range(internal) for c in range(1, m + 1)]
    return build_graph(n, edges)


@dataclass(frozen=True)
class BlockAssignment:
    base: Graph
    blocks: tuple
    offsets: tuple

    @property
    def size(self) -> int:
        return sum(b.n for b in self.blocks)

    def block_vertices(self, v: int) -> range:
        return range(self.offsets[v], self.offsets[v] + self.blocks[v].n)


def block_assignment(base: Graph, blocks: Sequence[Graph]) -> BlockAssignment:
    if len(blocks) != base.n:
        raise ValueError(f"need {base.n} blocks, got {len(blocks)}")
    offsets = []
    total = 0
    for b in blocks:
        offsets.append(total)
        total += b.n
    return BlockAssignment(base, tuple(blocks), tuple(offsets))


def join_along(base: Graph, blocks: Sequence[Graph]) -> Graph:
    """Blow up each base vertex into its block; base edges become complete bipartite joins."""
    ba = block_assignment(base, blocks)
    masks = [((1 << b.n) - 1) << off for b, off in zip(ba.blocks, ba.offsets)]
    adj = []
    for v, (b, off) in enumerate(zip(ba.blocks, ba.offsets)):
        cross = 0
        for w in range(base.n):
            if base.adj[v] >> w & 1:
                cross |= masks[w]
        for row in b.adj:
            adj.append((row << off) | cross)
    return Graph._trusted(ba.size, tuple(adj))


def windmill(m: int, copies: int | None = None) -> Graph:
    """``copies`` (default ``m``) copies of K_m sharing vertex 0."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    copies = m if copies is None else copies
    edges = []
    for c in range(copies):
        members = [0] + [1 + c * (m - 1) + i for i in range(m - 1)]
        edges += [(a, b) for i, a in enumerate(members) for b in members[i + 1:]]
    return build_graph(1 + copies * (m - 1), edges)


def join_power(G: Graph, m: int) -> Graph:
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    out = G
    for _ in range(m - 1):
        out = combine(out, G, "join")
    return out


def union_power(G: Graph, m: int) -> Graph:
    out = Graph._trusted(0, ())
    for _ in range(m):
        out = combine(out, G, "union")
    return out


def _check_even(k):
    if k < 2 or k % 2:
        raise ValueError(f"k must be an even integer >= 2, got {k}")


def embed_with_period(G: Graph, k: int) -> Graph:
    """A graph of metamour period exactly ``k`` containing ``G`` induced on ``0..|G|-1``."""
    _check_even(k)
    if G.n < 1:
        raise ValueError("G must have at least one vertex")
    n = 5 if k == 2 else 2 ** k - 1
    return join_along(cycle(n), [G] + [edgeless(1)] * (n - 1))


def embed_selfcomplementary(G: Graph) -> Graph:
    """Join of ``K1, G, co-G, co-G, G`` along C5; 4|V(G)| + 1 vertices."""
    Gc = complement(G)
    return join_along(cycle(5), [edgeless(1), G, Gc, Gc, G])


def pseudo_period_block_sizes(order: int, k: int) -> list[int]:
    """Sizes of the edgeless blocks 1..2^k: smallest increasing values avoiding ``order``."""
    sizes = []
    s = 1
    while len(sizes) < 2 ** k:
        if s != order:
            sizes.append(s)
        s += 1
    return sizes


def embed_pseudo_period(G: Graph, k: int) -> Graph:
    _check_even(k)
    n = 2 ** k + 1
    blocks = [G] + [edgeless(s) for s in pseudo_period_block_sizes(G.n, k)]
    return join_along(cycle(n), blocks)
