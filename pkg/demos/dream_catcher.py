"""Walk through the orbit of C7 with every vertex doubled."""

from __future__ import annotations

from metamour import complement, cycle, edgeless, is_isomorphic, join_along, mu, orbit
from metamour.graphio import encode_graph6

G = join_along(cycle(7), [edgeless(2)] * 7)
G0 = join_along(cycle(7), [complement(edgeless(2))] * 7)
o = orbit(G)

print(f"n = {G.n}, mu(7) = {mu(7)}, preperiod {o.preperiod}, period {o.period}")
for k in range(13):
    H = o.iterate(k)
    tags = []
    if H == G:
        tags.append("= G")
    if H == G0:
        tags.append("= G0")
    if is_isomorphic(H, G):
        tags.append("~ G")
    print(f"M^{k:<2d} {encode_graph6(H)}  {' '.join(tags)}")
