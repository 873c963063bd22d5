"""Metamour iterates of complete m-ary trees: the closed form against iteration."""

from __future__ import annotations

from metamour import mary_tree, orbit
from metamour import trees as tr

for h, m in [(5, 2), (6, 2), (5, 3), (8, 2)]:
    o = orbit(mary_tree(h, m))
    r = tr.tree_m2_report(h, m)
    agree = all(tr.tree_mk_graph(h, m, k) == o.iterate(k) for k in range(2, 8))
    print(f"T({h},{m}): {r.graph.n} vertices, M^2 components {len(r.components)}, "
          f"max diameter {r.max_diameter}, onset {o.preperiod} (ceil log2 h = {tr.log2_ceil(h)}), "
          f"period {o.period}, closed form agrees: {agree}")

# heights below 5
for h in (3, 4):
    for m in (2, 3):
        o = orbit(mary_tree(h, m))
        sizes = [o.iterate(k).num_edges for k in range(o.preperiod + 2)]
        print(f"T({h},{m}): edges along the orbit {sizes}, preperiod {o.preperiod}, period {o.period}")
