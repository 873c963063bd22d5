"""Canonical forms, isomorphism testing and subgraph search.

Canonical labeling is individualization-refinement: the vertex partition is
refined to an equitable one, a vertex of the first non-singleton cell is
individualized, and the search recurses.  Among all discrete leaves the
labeling with the lexicographically least relabeled adjacency wins.
Automorphisms discovered at equal leaves (and transpositions of twin
vertices) prune children that lie in a common orbit of the pointwise
stabilizer of the current prefix.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import Graph, _bits

MAX_CANONICAL_N = 16


class SizeLimitError(ValueError):
    """Raised when a graph exceeds the canonical-form size bound."""


def _refine(adj, cells, n):
    while len(cells) < n:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups = {}
            for v in cell:
                a = adj[v]
                sig = tuple([(a & m).bit_count() for m in masks])
                g = groups.get(sig)
                if g is None:
                    groups[sig] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new.append(groups[sig])
        cells = new
        if not changed:
            break
    return cells


def _twin_generators(adj, n, color):
    gens = []
    used = 0
    for u in range(n):
        if used >> u & 1:
            continue
        prev = u
        for v in range(u + 1, n):
            if used >> v & 1 or color[u] != color[v]:
                continue
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                perm = list(range(n))
                perm[prev], perm[v] = v, prev
                gens.append(tuple(perm))
                used |= 1 << v
                prev = v
    return gens


def _orbit_closure(seeds, gens):
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _canonical_search(adj, n, color):
    """Return ``(key, lab, generators)`` for the colored graph.

    ``lab[i]`` is the vertex placed at position ``i``; ``key`` is the tuple
    of relabeled adjacency rows, minimal over the search tree.
    """
    if n == 0:
        return (), [], []
    groups = {}
    for v in range(n):
        groups.setdefault(color[v], []).append(v)
    cells0 = [groups[c] for c in sorted(groups)]
    gens = _twin_generators(adj, n, color)
    best = [None, None]

    def leaf(cells):
        lab = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = []
        for v in lab:
            r = 0
            a = adj[v]
            while a:
                low = a & -a
                r |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(r)
        key = tuple(rows)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = lab
        elif key == best[0]:
            blab = best[1]
            perm = [0] * n
            for i in range(n):
                perm[blab[i]] = lab[i]
            perm = tuple(perm)
            if perm not in gens:
                gens.append(perm)

    def visit(cells, prefix):
        cells = _refine(adj, cells, n)
        if len(cells) == n:
            leaf(cells)
            return
        t = 0
        while len(cells[t]) == 1:
            t += 1
        cell = cells[t]
        head, tail = cells[:t], cells[t + 1:]
        done = []
        for v in cell:
            if done:
                active = [g for g in gens if all(g[p] == p for p in prefix)]
                if active and v in _orbit_closure(done, active):
                    continue
            done.append(v)
            rest = [w for w in cell if w != v]
            visit(head + [[v], rest] + tail, prefix + [v])

    visit(cells0, [])
    return best[0], best[1], gens


def _encode(n, key, colors):
    out = bytearray([n])
    if colors is not None:
        out += bytes([1]) + bytes(sorted(colors))
    else:
        out += bytes([0])
    width = (n + 7) // 8 or 1
    for row in key:
        out += row.to_bytes(width, "big")
    return bytes(out)


def _check_colors(G, colors):
    if colors is None:
        return [0] * G.n
    colors = list(colors)
    if len(colors) != G.n:
        raise ValueError("need one color per vertex")
    if any(not 0 <= c < 256 for c in colors):
        raise ValueError("colors must lie in 0..255")
    return colors


def canonical_labeling(G: Graph, colors: Optional[Sequence[int]] = None):
    """Canonical form plus the labeling achieving it.

    Returns ``(form, lab)`` where ``lab[i]`` is the vertex of ``G`` sent to
    position ``i`` of the canonical graph.
    """
    if G.n > MAX_CANONICAL_N:
        raise SizeLimitError(f"canonical form supports n <= {MAX_CANONICAL_N}, got {G.n}")
    col = _check_colors(G, colors)
    key, lab, _ = _canonical_search(G.adj, G.n, col)
    return _encode(G.n, key, None if colors is None else col), lab


def canonical_form(G: Graph, colors: Optional[Sequence[int]] = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (color-preserving)."""
    return canonical_labeling(G, colors)[0]


def automorphism_generators(G: Graph, colors: Optional[Sequence[int]] = None) -> list[tuple]:
    """Automorphisms found during the canonical search, as vertex maps ``v -> perm[v]``."""
    if G.n > MAX_CANONICAL_N:
        raise SizeLimitError(f"canonical form supports n <= {MAX_CANONICAL_N}, got {G.n}")
    _, _, gens = _canonical_search(G.adj, G.n, _check_colors(G, colors))
    return gens


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    n = G.n
    adj = [0] * n
    for v, row in enumerate(G.adj):
        r = 0
        for w in _bits(row):
            r |= 1 << perm[w]
        adj[perm[v]] = r
    return Graph._trusted(n, tuple(adj))


def canonical_graph(G: Graph) -> Graph:
    _, lab = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(lab):
        perm[v] = i
    return relabel(G, perm)


def _cheap_invariant(G: Graph):
    return G.n, sorted(G.degrees())


def find_isomorphism(G: Graph, H: Graph) -> Optional[list[int]]:
    """A vertex map ``phi`` with ``uv in E(G) <=> phi[u]phi[v] in E(H)``, or None.

    Works on any size: refinement runs on the disjoint union of ``G`` and
    ``H`` and every cell must hold equally many vertices from each side.
    """
    if _cheap_invariant(G) != _cheap_invariant(H):
        return None
    n = G.n
    if n == 0:
        return []
    N = 2 * n
    adj = list(G.adj) + [row << n for row in H.adj]

    def balanced(cells):
        for c in cells:
            left = sum(1 for v in c if v < n)
            if 2 * left != len(c):
                return False
        return True

    def visit(cells):
        cells = _refine(adj, cells, N)
        if not balanced(cells):
            return None
        if len(cells) == n:
            phi = [0] * n
            for c in cells:
                a, b = sorted(c)
                phi[a] = b - n
            for u in range(n):
                row = 0
                for w in _bits(G.adj[u]):
                    row |= 1 << phi[w]
                if row != H.adj[phi[u]]:
                    return None
            return phi
        t = next(i for i, c in enumerate(cells) if len(c) > 2)
        cell = cells[t]
        g = min(v for v in cell if v < n)
        for h in sorted(v for v in cell if v >= n):
            rest = [w for w in cell if w != g and w != h]
            found = visit(cells[:t] + [[g, h], rest] + cells[t + 1:])
            if found is not None:
                return found
        return None

    return visit([list(range(N))])


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if _cheap_invariant(G) != _cheap_invariant(H):
        return False
    if G.n <= MAX_CANONICAL_N:
        return canonical_form(G) == canonical_form(H)
    return find_isomorphism(G, H) is not None


def _search_order(H: Graph) -> list[int]:
    order = []
    placed = 0
    remaining = set(range(H.n))
    while remaining:
        best = min(remaining, key=lambda v: (-(H.adj[v] & placed).bit_count(), -H.degree(v), v))
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def subgraph_search(G: Graph, H: Graph, induced: bool = False) -> Optional[dict[int, int]]:
    """Injective map ``V(H) -> V(G)`` realizing ``H`` as a subgraph of ``G``.

    With ``induced`` the image must induce exactly ``H``.  Candidates are
    tried in ascending vertex id, so the witness is reproducible.
    """
    if H.n > G.n:
        return None
    order = _search_order(H)
    gdeg = G.degrees()
    hdeg = H.degrees()
    mapping: dict[int, int] = {}
    used = 0

    def extend(i):
        nonlocal used
        if i == len(order):
            return True
        h = order[i]
        need = 0
        avoid = 0
        for j in range(i):
            hp = order[j]
            if H.adj[h] >> hp & 1:
                need |= 1 << mapping[hp]
            elif induced:
                avoid |= 1 << mapping[hp]
        for g in range(G.n):
            if used >> g & 1 or gdeg[g] < hdeg[h]:
                continue
            row = G.adj[g]
            if row & need != need or row & avoid:
                continue
            mapping[h] = g
            used |= 1 << g
            if extend(i + 1):
                return True
            used &= ~(1 << g)
            del mapping[h]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None
