"""Named graph families and reproducible random connected graphs.

The random generator is Python's ``random.Random`` (Mersenne Twister),
seeded explicitly; identical (n, p, seed) triples give identical graphs
on every platform. Do not change the generator silently: certificates
reference the graphs it produces.
"""

from __future__ import annotations

import random

from .graphs import Graph, GraphError, build_graph, is_connected


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(s: int, t: int) -> Graph:
    """Parts 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise GraphError("complete bipartite graph needs s, t >= 1")
    return build_graph(s + t, [(u, s + v) for u in range(s) for v in range(t)])


def standard(name: str, *params: int) -> Graph:
    """Dispatch by family name: complete, cycle, path, complete_bipartite."""
    table = {
        "complete": complete,
        "cycle": cycle,
        "path": path,
        "complete_bipartite": complete_bipartite,
    }
    if name not in table:
        raise GraphError(f"unknown graph family {name!r}")
    return table[name](*params)


def kss_minus_pm(s: int) -> Graph:
    """Balanced complete bipartite graph minus a perfect matching.

    Parts X = 0..s-1 and Y = s..2s-1; edge x_i y_j iff i != j, so the
    deleted matching is {x_i y_i}. (s-1)-regular and (s-1)-connected.
    """
    if s < 2:
        raise GraphError("kss_minus_pm needs s >= 2")
    return build_graph(2 * s, [(i, s + j) for i in range(s) for j in range(s) if i != j])


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) resampled until connected.

    Edge slots are drawn in lexicographic (u, v) order from a single
    ``random.Random(seed)`` stream, so the result is reproducible.
    """
    if n < 1 or n > 62:
        raise GraphError("random_connected needs 1 <= n <= 62")
    p = min(max(p, 0.0), 1.0)
    rng = random.Random(seed)
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g
        if p == 0.0 and n > 1:  # can never become connected
            raise GraphError("p=0 cannot produce a connected graph on n >= 2 vertices")
