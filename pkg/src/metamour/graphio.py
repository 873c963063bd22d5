"""Text formats for graphs: graph6, DOT, edge lists, and the --graph spec language."""

from __future__ import annotations

from typing import Optional, Sequence

from .constructions import (
    c5hat,
    complete,
    cycle,
    generalized_petersen,
    join_along,
    mary_tree,
    paley,
    path,
    PetersenSpec,
)
from .graph import Graph, build_graph, edgeless

GRAPH6_MAX_N = 62


class GraphFormatError(ValueError):
    pass


def encode_graph6(G: Graph) -> str:
    """Short-form graph6 (n <= 62): header 63 + n, then the upper triangle by columns."""
    n = G.n
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 short form supports n <= {GRAPH6_MAX_N}, got {n}")
    bits = [G.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(63 + v))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise GraphFormatError("graph6 characters must lie in '?'..'~'")
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphFormatError("long-form graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise GraphFormatError(f"expected {need} data bytes for n = {n}, got {len(body)}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def export_dot(G: Graph, labels: Optional[Sequence[str]] = None, name: str = "G") -> str:
    if labels is not None and len(labels) != G.n:
        raise ValueError("need one label per vertex")
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edgelist(G: Graph) -> str:
    """First line ``n m``, then one ``u v`` line per edge."""
    lines = [f"{G.n} {G.num_edges}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphFormatError("edge list must start with 'n m'")
    n, m = map(int, rows[0])
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    return build_graph(n, [(int(a), int(b)) for a, b in rows[1:]])


def _ints(arg: str, count: int, kind: str) -> list[int]:
    parts = arg.split(",") if arg else []
    if len(parts) != count:
        raise GraphFormatError(f"{kind} takes {count} integer argument(s), got {arg!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"{kind} arguments must be integers, got {arg!r}") from None


def _split_blocks(text: str) -> list[str]:
    # commas inside parameter lists (petersen:5,2) are not block separators
    blocks, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            blocks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    blocks.append("".join(cur))
    return [b.strip() for b in blocks]


def _unwrap(spec: str) -> str:
    spec = spec.strip()
    if spec.startswith("(") and spec.endswith(")"):
        return spec[1:-1]
    return spec


def parse_graph_spec(spec: str) -> Graph:
    """Build a graph from the mini-language used by ``--graph``.

    Forms: ``cycle:n``, ``path:n``, ``complete:n``, ``edgeless:n``,
    ``c5hat``, ``paley:q``, ``petersen:m,j``, ``tree:h,m``, ``g6:<str>``,
    ``complement:<spec>`` and ``joinalong:<base>;<block>,<block>,...``.
    Inside a join, a block with its own commas is wrapped in parentheses.
    """
    spec = _unwrap(spec)
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "c5hat":
        return c5hat()
    if kind in ("cycle", "path", "complete", "edgeless"):
        (n,) = _ints(arg, 1, kind)
        return {"cycle": cycle, "path": path, "complete": complete, "edgeless": edgeless}[kind](n)
    if kind == "paley":
        (q,) = _ints(arg, 1, kind)
        return paley(q)
    if kind == "petersen":
        m, j = _ints(arg, 2, kind)
        return generalized_petersen(m, j)
    if kind == "tree":
        h, m = _ints(arg, 2, kind)
        return mary_tree(h, m)
    if kind == "g6":
        return decode_graph6(arg)
    if kind == "complement":
        from .graph import complement

        return complement(parse_graph_spec(arg))
    if kind == "joinalong":
        base_text, sep, block_text = arg.partition(";")
        if not sep:
            raise GraphFormatError("joinalong needs '<base>;<block>,<block>,...'")
        base = parse_graph_spec(base_text)
        blocks = [parse_graph_spec(b) for b in _split_blocks(block_text)]
        return join_along(base, blocks)
    raise GraphFormatError(f"unknown graph kind {kind!r}")


def spec_labels(spec: str) -> Optional[list[str]]:
    """Family labels for DOT export: v_i/u_i for Petersen graphs, root paths for trees."""
    from .trees import tree_labels

    kind, _, arg = _unwrap(spec).partition(":")
    kind = kind.strip().lower()
    if kind == "petersen":
        m, j = _ints(arg, 2, kind)
        return PetersenSpec(m, j).labels()
    if kind == "tree":
        h, m = _ints(arg, 2, kind)
        return tree_labels(h, m)
    return None
