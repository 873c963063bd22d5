"""Iterated metamour sequences: orbits, periods, pseudo-periods and mu(n)."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .canon import is_isomorphic
from .graph import Graph, build_graph, metamour

DEFAULT_MAX_ITERS = 100_000


class OrbitBoundExceeded(RuntimeError):
    """The iterate sequence did not repeat within the step budget."""


@dataclass(frozen=True)
class OrbitReport:
    iterates: tuple
    preperiod: int
    period: int

    @property
    def limit_set(self) -> tuple:
        return self.iterates[self.preperiod:self.preperiod + self.period]

    def iterate(self, k: int) -> Graph:
        """M^k(G) for any k >= 0, read off the eventually periodic sequence."""
        N, p = self.preperiod, self.period
        if k < N:
            return self.iterates[k]
        return self.iterates[N + (k - N) % p]


@dataclass(frozen=True)
class PeriodProfile:
    n: int
    mu: int
    cycle_period: Optional[int]


def mu(n: int) -> int:
    """Least k >= 1 with 2^k = +-1 (mod n), for odd n >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"mu is defined for odd n >= 3, got {n}")
    x = 1
    for k in range(1, n + 1):
        x = 2 * x % n
        if x == 1 or x == n - 1:
            return k
    raise AssertionError("unreachable: 2 is a unit mod odd n")


def metamour_iterate(G: Graph, k: int) -> Graph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    for _ in range(k):
        G = metamour(G)
    return G


def _default_bound() -> int:
    raw = os.environ.get("METAMOUR_MAX_ITERS")
    if raw is None:
        return DEFAULT_MAX_ITERS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"METAMOUR_MAX_ITERS must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("METAMOUR_MAX_ITERS must be positive")
    return value


def orbit(G: Graph, max_steps: Optional[int] = None) -> OrbitReport:
    """Iterate M until a graph repeats (labeled equality).

    ``max_steps`` bounds the number of applications of M; it defaults to
    the ``METAMOUR_MAX_ITERS`` environment variable.
    """
    if max_steps is None:
        max_steps = _default_bound()
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    seen = {G.adj: 0}
    iterates = [G]
    cur = G
    for step in range(1, max_steps + 1):
        cur = metamour(cur)
        first = seen.get(cur.adj)
        if first is not None:
            return OrbitReport(tuple(iterates), first, step - first)
        seen[cur.adj] = step
        iterates.append(cur)
    raise OrbitBoundExceeded(f"no repeat within {max_steps} steps on {G.n} vertices")


def metamour_period(G: Graph, max_steps: Optional[int] = None) -> Optional[int]:
    rep = orbit(G, max_steps)
    return rep.period if rep.preperiod == 0 else None


def pseudo_metamour_period(G: Graph, max_steps: Optional[int] = None) -> Optional[int]:
    """Least k >= 1 with M^k(G) isomorphic to G.

    Once k passes N + p the iterates only revisit the cycle, so checking
    k in 1..N+p is exhaustive.
    """
    rep = orbit(G, max_steps)
    for k in range(1, rep.preperiod + rep.period + 1):
        if is_isomorphic(rep.iterate(k), G):
            return k
    return None


def cycle_power_edges(n: int, k: int) -> Graph:
    """Graph on Z/n with edges i ~ i + 2^k, the closed form of M^k(C_n) for odd n."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"need odd n >= 5, got {n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    step = pow(2, k, n)
    return build_graph(n, [(i, (i + step) % n) for i in range(n)])


def period_profile(n: int) -> PeriodProfile:
    from .constructions import cycle

    return PeriodProfile(n, mu(n), metamour_period(cycle(n)) if n >= 3 else None)
