"""Immutable bitmask-based simple graphs and basic structural queries.

Vertices are 0..n-1 with n <= 62 so every adjacency row and every vertex
subset fits in a single machine word. A vertex set is represented as a
plain ``int`` bitmask throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for malformed graph construction or contract violations."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``rows[v]`` is the neighbor bitmask of v."""

    n: int
    rows: tuple[int, ...]

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list.

    Duplicate edges collapse; (u, v) and (v, u) are the same edge.
    """
    if n < 0 or n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def delete_vertices(g: Graph, s: int) -> Graph:
    """Induced subgraph on V(g) minus the masked set, relabeled 0..m-1.

    Surviving vertices keep their relative order; use ``deletion_map`` to
    recover original labels.
    """
    if s & ~g.full_mask():
        raise GraphError("deletion set contains vertices outside the graph")
    keep = [v for v in range(g.n) if not (s >> v) & 1]
    index = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        m = g.rows[v] & ~s
        for w in bits(m):
            rows[index[v]] |= 1 << index[w]
    return Graph(len(keep), tuple(rows))


def deletion_map(g: Graph, s: int) -> list[int]:
    """new label -> old label mapping used by ``delete_vertices(g, s)``."""
    return [v for v in range(g.n) if not (s >> v) & 1]


def _reach(rows: tuple[int, ...], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, sorted by smallest member."""
    out = []
    todo = g.full_mask()
    while todo:
        start = (todo & -todo).bit_length() - 1
        comp = _reach(g.rows, start, todo)
        out.append(comp)
        todo &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True for the empty graph and any graph with one component."""
    if g.n == 0:
        return True
    return _reach(g.rows, 0, g.full_mask()) == g.full_mask()


def is_connected_after_deletion(g: Graph, s: int) -> bool:
    """Whether V(g) minus the masked set induces a connected subgraph.

    Avoids materializing the relabeled subgraph; empty remainder counts
    as connected.
    """
    remain = g.full_mask() & ~s
    if remain == 0:
        return True
    start = (remain & -remain).bit_length() - 1
    return _reach(g.rows, start, remain) == remain


def is_vertex_cut(g: Graph, s: int) -> bool:
    """Whether removing the masked set disconnects g.

    Requires g connected and s a proper subset of V(g); a remainder of a
    single vertex is connected, so complete graphs have no vertex cuts.
    """
    if not is_connected(g) or g.n == 0:
        raise GraphError("is_vertex_cut requires a connected graph")
    if s & ~g.full_mask() or s == g.full_mask():
        raise GraphError("cut candidate must be a proper subset of the vertices")
    remain = g.full_mask() & ~s
    if remain.bit_count() < 2:
        return False
    return not is_connected_after_deletion(g, s)


def is_independent_set(g: Graph, s: int) -> bool:
    """No edge joins two members of the masked set."""
    if s & ~g.full_mask():
        raise GraphError("set contains vertices outside the graph")
    for v in bits(s):
        if g.rows[v] & s:
            return False
    return True


class DistanceProfile(NamedTuple):
    dist: list[list[int]]
    ecc: list[int]
    diameter: int
    periphery: int  # vertex mask


def distance_profile(g: Graph) -> DistanceProfile:
    """All-pairs hop distances, eccentricities, diameter and periphery.

    BFS from every vertex; raises on disconnected input since the
    diameter is undefined there.
    """
    if g.n == 0:
        raise GraphError("diameter undefined: empty graph")
    if not is_connected(g):
        raise GraphError("diameter undefined: graph is disconnected")
    dist = [[0] * g.n for _ in range(g.n)]
    ecc = [0] * g.n
    full = g.full_mask()
    for s in range(g.n):
        row = dist[s]
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            nxt &= full & ~seen
            for v in bits(nxt):
                row[v] = d
            seen |= nxt
            frontier = nxt
        ecc[s] = max(row)
    diameter = max(ecc)
    periphery = mask_of(v for v in range(g.n) if ecc[v] == diameter)
    return DistanceProfile(dist, ecc, diameter, periphery)
