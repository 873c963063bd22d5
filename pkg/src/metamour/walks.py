"""2-walks, fully minimal 2-walks, d2 and the parity unions FM_ev / FM_od.

A 2-walk of length k is a walk w_0..w_{2^k} in G whose dyadic triples
(w_a, w_{a+2^i}, w_{a+2^{i+1}}) are pairwise distinct and whose even-index
neighbours w_{2j}, w_{2j+2} are non-adjacent.  Splitting such a walk at its
midpoint gives two 2-walks of length k-1, so existence is a relation
recursion:

    R_1(u, v)  iff  uv in E(M(G))
    R_k(u, v)  iff  some w not in {u, v} has R_{k-1}(u, w) and R_{k-1}(w, v)

and for fully minimal walks additionally ``not R_{k-1}(u, v)`` at every
split.  The explicit enumerators below do not use the recursion and serve as
oracles for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .graph import Graph, _bits, metamour


def _as_matrix(G: Graph) -> np.ndarray:
    n = G.n
    out = np.zeros((n, n), dtype=bool)
    for v, row in enumerate(G.adj):
        for w in _bits(row):
            out[v, w] = True
    return out


def _compose(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(u, v) with a middle w, u != v; w differs from u, v because A, B are irreflexive."""
    out = (A.astype(np.int32) @ B.astype(np.int32)) > 0
    np.fill_diagonal(out, False)
    return out


def _pairs(M: np.ndarray) -> frozenset:
    us, vs = np.nonzero(np.triu(M, 1))
    return frozenset(zip(us.tolist(), vs.tolist()))


@dataclass
class FmRelation:
    """Level relations R_k and F_k, computed until the pair (R_k, F_k) repeats.

    ``R[k - 1]`` and ``F[k - 1]`` hold level ``k``.  When ``cycle_start`` is
    set, level ``k >= cycle_start`` equals level
    ``cycle_start + (k - cycle_start) % cycle_length``.
    """

    graph: Graph
    R: list = field(default_factory=list)
    F: list = field(default_factory=list)
    cycle_start: Optional[int] = None
    cycle_length: Optional[int] = None

    @property
    def saturated(self) -> bool:
        return self.cycle_start is not None

    def _index(self, k: int) -> int:
        if k < 1:
            raise ValueError("levels start at k = 1")
        if k <= len(self.R):
            return k - 1
        if not self.saturated:
            raise ValueError(f"level {k} not computed and relations not saturated")
        s, p = self.cycle_start, self.cycle_length
        return s + (k - s) % p - 1

    def R_at(self, k: int) -> np.ndarray:
        return self.R[self._index(k)]

    def F_at(self, k: int) -> np.ndarray:
        return self.F[self._index(k)]

    def d2(self) -> np.ndarray:
        """Least level with R_k(u, v), 0 where none exists (always 0 on the diagonal)."""
        n = self.graph.n
        out = np.zeros((n, n), dtype=np.int64)
        for k, Rk in enumerate(self.R, start=1):
            out[(out == 0) & Rk] = k
        return out


def fm_relation(G: Graph, max_level: Optional[int] = None) -> FmRelation:
    """Compute R_k, F_k level by level until they cycle, or up to ``max_level``."""
    rel = FmRelation(G)
    R = _as_matrix(metamour(G))
    F = R.copy()
    seen = {}
    k = 1
    while True:
        key = (R.tobytes(), F.tobytes())
        if key in seen:
            rel.cycle_start = seen[key]
            rel.cycle_length = k - seen[key]
            return rel
        seen[key] = k
        rel.R.append(R)
        rel.F.append(F)
        if max_level is not None and k >= max_level:
            return rel
        R, F = _compose(R, R), _compose(F, F) & ~R
        k += 1


def two_walk_exists(G: Graph, u: int, v: int, k: int, rel: Optional[FmRelation] = None) -> bool:
    if u == v:
        raise ValueError("endpoints of a 2-walk must be distinct")
    if k < 1:
        raise ValueError("k must be at least 1")
    rel = rel or fm_relation(G)
    return bool(rel.R_at(k)[u, v])


def d2_value(G: Graph, u: int, v: int, rel: Optional[FmRelation] = None) -> Optional[int]:
    """Least length of a 2-walk from u to v, None if there is none."""
    if u == v:
        raise ValueError("endpoints of a 2-walk must be distinct")
    rel = rel or fm_relation(G)
    d = int(rel.d2()[u, v])
    return d or None


def fully_minimal_set(G: Graph, k: int, rel: Optional[FmRelation] = None) -> frozenset:
    """FM_k(G) as pairs ``(u, v)`` with ``u < v``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rel = rel or fm_relation(G)
    return _pairs(rel.F_at(k))


@dataclass(frozen=True)
class ParitySets:
    even: frozenset
    odd: frozenset
    stabilized_by: int
    confirmed: bool
    levels: int


def fm_parity_sets(G: Graph, bound: int) -> ParitySets:
    """Unions of FM_k over even and odd k.

    ``stabilized_by`` is the least N >= 1 such that the levels k <= N already
    give both unions.  ``confirmed`` is True when the relations cycled and
    that N is within ``bound``; otherwise the unions cover k <= bound only.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rel = fm_relation(G, max_level=bound + 1)
    if rel.saturated:
        # every level repeats one below this, in both parities
        top = len(rel.F) + 2 * rel.cycle_length
    else:
        top = bound
    n = G.n
    acc = {0: np.zeros((n, n), dtype=bool), 1: np.zeros((n, n), dtype=bool)}
    last = 1
    for k in range(1, top + 1):
        Fk = rel.F_at(k)
        if (Fk & ~acc[k % 2]).any():
            last = k
            acc[k % 2] |= Fk
    confirmed = rel.saturated and last <= bound
    return ParitySets(_pairs(acc[0]), _pairs(acc[1]), last, confirmed, len(rel.F))


# explicit walk enumeration, kept independent of the recursion above


def dyadic_triples(k: int) -> list[tuple[int, int, int]]:
    out = []
    for i in range(k):
        s = 1 << i
        for j in range(1 << (k - i - 1)):
            a = 2 * j * s
            out.append((a, a + s, a + 2 * s))
    return out


def _constraints(k: int):
    """Per position t, the triples and base pairs whose largest index is t."""
    L = 1 << k
    triples = [[] for _ in range(L + 1)]
    bases = [[] for _ in range(L + 1)]
    for a, b, c in dyadic_triples(k):
        triples[c].append((a, b))
    for j in range(1 << (k - 1)):
        bases[2 * j + 2].append(2 * j)
    return triples, bases


@dataclass(frozen=True)
class TwoWalk:
    level: int
    vertices: tuple

    def violations(self, G: Graph) -> list[str]:
        k, w = self.level, self.vertices
        out = []
        if k < 1 or len(w) != (1 << k) + 1:
            return [f"need {(1 << max(k, 0)) + 1} vertices for level {k}, got {len(w)}"]
        for t in range(len(w) - 1):
            if not G.has_edge(w[t], w[t + 1]):
                out.append(f"w{t} w{t + 1} is not an edge")
        for a, b, c in dyadic_triples(k):
            if len({w[a], w[b], w[c]}) < 3:
                out.append(f"triple ({a}, {b}, {c}) repeats a vertex")
        for j in range(1 << (k - 1)):
            if G.has_edge(w[2 * j], w[2 * j + 2]):
                out.append(f"w{2 * j} w{2 * j + 2} is an edge")
        return out

    def is_valid(self, G: Graph) -> bool:
        return not self.violations(G)

    def spans(self, i: int) -> list[tuple[int, int]]:
        """Endpoint pairs of the sub-walks of length ``i`` (2^i edges each)."""
        s = 1 << i
        return [(self.vertices[a], self.vertices[a + s]) for a in range(0, len(self.vertices) - 1, s)]


def iter_two_walks(G: Graph, u: int, v: Optional[int], k: int) -> Iterator[TwoWalk]:
    """Every 2-walk of length k starting at u (ending at v when given), by DFS."""
    L = 1 << k
    triples, bases = _constraints(k)
    adj = G.adj
    w = [u] + [0] * L

    def ok(t):
        x = w[t]
        for a, b in triples[t]:
            if x == w[a] or x == w[b] or w[a] == w[b]:
                return False
        for a in bases[t]:
            if adj[x] >> w[a] & 1:
                return False
        return True

    def dfs(t):
        if t == L:
            if v is None or w[L] == v:
                yield TwoWalk(k, tuple(w))
            return
        for x in _bits(adj[w[t]]):
            w[t + 1] = x
            if ok(t + 1):
                yield from dfs(t + 1)

    yield from dfs(0)


def is_fully_minimal(walk: TwoWalk, rel: FmRelation) -> bool:
    """No span of length i + 1 admits a 2-walk of length i, for 1 <= i <= k - 1."""
    for i in range(1, walk.level):
        Ri = rel.R_at(i)
        for a, b in walk.spans(i + 1):
            if Ri[a, b]:
                return False
    return True


def two_walk_pairs_bruteforce(G: Graph, k: int) -> frozenset:
    """Ordered pairs (u, v) joined by a 2-walk of length k, by explicit enumeration.

    The walk is built one position at a time; every constraint is checked
    when its last position is placed.  Partial walks that agree on the
    positions still needed by later constraints are merged, which keeps the
    search exact while avoiding re-enumerating identical suffixes.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    L = 1 << k
    triples, bases = _constraints(k)
    last_use = [0] * (L + 1)
    for t in range(L + 1):
        for a, b in triples[t]:
            last_use[a] = max(last_use[a], t)
            last_use[b] = max(last_use[b], t)
        for a in bases[t]:
            last_use[a] = max(last_use[a], t)
    adj = G.adj
    found = set()
    for u in range(G.n):
        # state: tuple of (position, vertex) for live positions, current vertex last
        frontier = {((0, u),)}
        for t in range(1, L + 1):
            live_after = [p for p in range(t + 1) if p == t or last_use[p] > t]
            nxt = set()
            for state in frontier:
                assign = dict(state)
                cur = state[-1][1]
                for x in _bits(adj[cur]):
                    assign[t] = x
                    good = True
                    for a, b in triples[t]:
                        if x == assign[a] or x == assign[b] or assign[a] == assign[b]:
                            good = False
                            break
                    if good:
                        for a in bases[t]:
                            if adj[x] >> assign[a] & 1:
                                good = False
                                break
                    if good:
                        nxt.add(tuple((p, assign[p]) for p in live_after))
                assign.pop(t, None)
            frontier = nxt
            if not frontier:
                break
        for state in frontier:
            found.add((u, state[-1][1]))
    return frozenset(found)


def mk_edge_oracle(G: Graph, k: int, budget: int = 5_000_000) -> Graph:
    """E(M^k(G)) rebuilt from walks in G alone.

    Level i edges are the pairs (u, v), u != v, not joined at level i - 1,
    for which some walk of 2^i edges in G has every dyadic sub-span of
    length 2^j (j < i) an edge of level j and u, v joined through the
    walk's midpoint.  Each level is found by explicit DFS over walks.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = G.n
    levels = [G.adj]
    steps = 0
    for i in range(1, k + 1):
        L = 1 << i
        prev = levels[i - 1]
        rows = [0] * n
        w = [0] * (L + 1)

        def spans_ok(t):
            j = 0
            while j < i and t % (1 << (j + 1)) == 0:
                j += 1
                if j < i and not levels[j][w[t - (1 << j)]] >> w[t] & 1:
                    return False
            return True

        def dfs(t):
            nonlocal steps
            steps += 1
            if steps > budget:
                raise RuntimeError(f"walk budget of {budget} exceeded")
            if t == L:
                a, b = w[0], w[L]
                if a != b and not prev[a] >> b & 1 and w[L // 2] not in (a, b):
                    rows[a] |= 1 << b
                return
            for x in _bits(G.adj[w[t]]):
                w[t + 1] = x
                if spans_ok(t + 1):
                    dfs(t + 1)

        for u in range(n):
            w[0] = u
            dfs(0)
        levels.append(tuple(rows))
    return Graph(n, levels[k])


def restrict(walk: TwoWalk, i: int, j: int) -> TwoWalk:
    """The ``j``-th dyadic span of ``2^(i+1)`` edges, as a 2-walk of length ``i + 1``."""
    L = 1 << (i + 1)
    if not 0 <= i < walk.level or not 0 <= j < (1 << walk.level) // L:
        raise ValueError(f"no span ({i}, {j}) in a walk of level {walk.level}")
    return TwoWalk(i + 1, tuple(walk.vertices[j * L:(j + 1) * L + 1]))


def iter_built_walks(G: Graph, u: int, v: int, k: int, rel: Optional[FmRelation] = None,
                     fully_minimal: bool = False) -> Iterator[TwoWalk]:
    """2-walks of length k from u to v assembled top-down, one per choice of
    dyadic midpoints allowed by R (or by F when ``fully_minimal``)."""
    if u == v or k < 1:
        raise ValueError("need u != v and k >= 1")
    rel = rel or fm_relation(G)

    def rows(level):
        return rel.F_at(level) if fully_minimal else rel.R_at(level)

    def build(a, b, level):
        if level == 0:
            yield [a, b]
            return
        if not rows(level)[a, b]:
            return
        if level == 1:
            mids = list(_bits(G.adj[a] & G.adj[b]))
        else:
            below = rows(level - 1)
            mids = np.nonzero(below[a] & below[:, b])[0].tolist()
        for w in mids:
            if w in (a, b):
                continue
            for left in build(a, w, level - 1):
                for right in build(w, b, level - 1):
                    yield left + right[1:]

    for path in build(u, v, k):
        yield TwoWalk(k, tuple(path))


def build_two_walk(G: Graph, u: int, v: int, k: int, rel: Optional[FmRelation] = None,
                   fully_minimal: bool = False) -> Optional[TwoWalk]:
    return next(iter_built_walks(G, u, v, k, rel, fully_minimal), None)


def min_vs_fully_minimal_witness(G: Graph, max_level: Optional[int] = None, per_pair: int = 2000):
    """A minimal-length 2-walk that is not fully minimal, and a fully minimal
    2-walk that is not of minimal length.  Returns ``(walk_a, walk_b)``,
    either entry None when none turns up among the first ``per_pair`` walks
    of each candidate pair up to ``max_level``."""
    rel = fm_relation(G)
    d2 = rel.d2()
    top = len(rel.R) if max_level is None else max_level
    not_fm = None
    fm_not_min = None
    for k in range(2, top + 1):
        if fm_not_min is None:
            cand = np.argwhere(rel.F_at(k) & (d2 < k) & (d2 > 0))
            if len(cand):
                u, v = map(int, cand[0])
                fm_not_min = build_two_walk(G, u, v, k, rel, fully_minimal=True)
        if not_fm is None:
            for u, v in np.argwhere(d2 == k).tolist():
                for t, walk in enumerate(iter_built_walks(G, u, v, k, rel)):
                    if t >= per_pair:
                        break
                    if not is_fully_minimal(walk, rel):
                        not_fm = walk
                        break
                if not_fm is not None:
                    break
        if not_fm is not None and fm_not_min is not None:
            break
    return not_fm, fm_not_min
