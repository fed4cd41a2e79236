"""Independent sets, matchings, line graphs and induced-claw detection.

Enumerations are streams (generators) in documented lexicographic order
so that "first witness" answers are deterministic, and they terminate
early when a caller only needs existence.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graphs import Graph, GraphError, bits, build_graph, is_independent_set, mask_of

Matching = tuple[tuple[int, int], ...]


def independent_sets_of_size(g: Graph, k: int) -> Iterator[int]:
    """All independent sets of cardinality exactly k, as vertex masks.

    Yielded in lexicographic order of the sorted vertex tuples;
    backtracking keeps a mask of still-eligible candidates.
    """
    if k < 0:
        raise GraphError("independent_sets_of_size requires k >= 0")
    if k == 0:
        yield 0
        return

    rows = g.rows
    n = g.n

    def rec(chosen: int, count: int, candidates: int) -> Iterator[int]:
        if count == k:
            yield chosen
            return
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if n - v < k - count:  # not enough vertices left
                break
            yield from rec(chosen | low, count + 1, m & ~rows[v])
    yield from rec(0, 0, g.full_mask())


def has_independent_set_of_size(g: Graph, k: int) -> bool:
    for _ in independent_sets_of_size(g, k):
        return True
    return False


def independence_number(g: Graph) -> int:
    """Maximum independent set size, by branch and bound on bitmasks."""
    rows = g.rows
    best = 0

    def bound(candidates: int) -> int:
        return candidates.bit_count()

    def rec(count: int, candidates: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + bound(candidates) <= best:
            return
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if count + 1 + (m & ~rows[v]).bit_count() <= best:
                continue
            rec(count + 1, m & ~rows[v])

    rec(0, g.full_mask())
    return best


def matchings_of_size(g: Graph, k: int) -> Iterator[Matching]:
    """All matchings of cardinality exactly k.

    Yielded in lexicographic order of their sorted edge lists.
    """
    if k < 0:
        raise GraphError("matchings_of_size requires k >= 0")
    edges = g.edges()

    def rec(start: int, chosen: list[tuple[int, int]], used: int) -> Iterator[Matching]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(edges)):
            if len(edges) - i < k - len(chosen):
                break
            u, v = edges[i]
            if (used >> u) & 1 or (used >> v) & 1:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, chosen, used | (1 << u) | (1 << v))
            chosen.pop()

    yield from rec(0, [], 0)


def matching_number(g: Graph) -> int:
    """nu(g) by exhaustive branching on the lowest-labeled covered vertex."""
    edges_by_vertex = [list(bits(r)) for r in g.rows]

    def rec(used: int, lo: int) -> int:
        v = lo
        while v < g.n and ((used >> v) & 1 or not (g.rows[v] & ~used)):
            v += 1
        if v >= g.n:
            return 0
        # v is the lowest vertex that could still be matched
        best = rec(used | (1 << v), v + 1)  # leave v unmatched
        for w in edges_by_vertex[v]:
            if not (used >> w) & 1:
                best = max(best, 1 + rec(used | (1 << v) | (1 << w), v + 1))
        return best

    return rec(0, 0)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph plus the map from its vertices back to edges of g.

    Vertex i of the result is edges()[i]; adjacency means sharing an
    endpoint.
    """
    edges = g.edges()
    m = len(edges)
    pairs = []
    for i in range(m):
        u1, v1 = edges[i]
        e1 = (1 << u1) | (1 << v1)
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if e1 & ((1 << u2) | (1 << v2)):
                pairs.append((i, j))
    return build_graph(m, pairs), edges


def find_induced_claw(g: Graph) -> Optional[int]:
    """Lexicographically smallest 4-set inducing K_{1,3}, or None.

    The returned mask contains the center and three pairwise nonadjacent
    leaves; smallest means minimal sorted vertex tuple over all induced
    claws.
    """
    best: Optional[tuple[int, ...]] = None
    for c in range(g.n):
        nbrs = list(bits(g.rows[c]))
        if len(nbrs) < 3:
            continue
        for i in range(len(nbrs)):
            a = nbrs[i]
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                if g.has_edge(a, b):
                    continue
                for l in range(j + 1, len(nbrs)):
                    d = nbrs[l]
                    if g.has_edge(a, d) or g.has_edge(b, d):
                        continue
                    key = tuple(sorted((c, a, b, d)))
                    if best is None or key < best:
                        best = key
    if best is None:
        return None
    return mask_of(best)


def is_matching_of(g: Graph, m: Matching) -> bool:
    """Type invariants: disjoint endpoints, every pair an edge of g."""
    used = 0
    for u, v in m:
        if u >= v or not g.has_edge(u, v):
            return False
        e = (1 << u) | (1 << v)
        if used & e:
            return False
        used |= e
    return True


def remove_edges(g: Graph, m: Matching) -> Graph:
    """g with the matching's edges removed (vertices untouched)."""
    rows = list(g.rows)
    for u, v in m:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))
