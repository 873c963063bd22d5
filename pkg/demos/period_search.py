"""Exhaustive period search on small connected graphs."""

from __future__ import annotations

import sys
import time

from metamour.verify import describe_components, search_exact_period

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8
for k in (1, 2, 3):
    t = time.perf_counter()
    found = search_exact_period(n_max, k)
    names = [" + ".join(describe_components(G)) for G in found]
    shown = ", ".join(names[:6]) + (" ..." if len(names) > 6 else "")
    print(f"period {k}: {len(found)} graphs on <= {n_max} vertices ({time.perf_counter() - t:.1f}s)  {shown}")
