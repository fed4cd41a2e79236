"""Vertex and edge connectivity via unit-capacity flow, with cut witnesses.

Local vertex connectivity uses the standard vertex-split digraph: each
vertex v becomes an arc v_in -> v_out of capacity one, each edge two
infinite arcs, and the number of internally disjoint s-t paths equals the
max flow (Menger). Exactness is all that matters at this scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import numpy as np

from ._kernels import maxflow_matrix
from .graphs import Graph, GraphError, bits, components, delete_vertices, is_connected, mask_of

_BIG = 10_000


@dataclass(frozen=True)
class CutWitness:
    """A disconnecting set together with the two sides it separates."""

    kind: str  # "vertex-cut" | "edge-cut"
    vertices: Optional[int]  # vertex mask for the vertex kind
    edge_list: Optional[tuple[tuple[int, int], ...]]  # for the edge kind
    sides: tuple[int, int]  # nonempty vertex masks separated by the cut


def _split_base(g: Graph) -> np.ndarray:
    """Capacity matrix of the vertex-split digraph (v_in=2v, v_out=2v+1)."""
    size = 2 * g.n
    cap = np.zeros((size, size), dtype=np.int32)
    for v in range(g.n):
        cap[2 * v, 2 * v + 1] = 1
        for w in bits(g.rows[v]):
            cap[2 * v + 1, 2 * w] = _BIG
    return cap


def _local_vc(g: Graph, base: np.ndarray, s: int, t: int, cutoff: Optional[int]) -> int:
    cap = base.copy()
    cap[2 * s, 2 * s + 1] = _BIG
    cap[2 * t, 2 * t + 1] = _BIG
    limit = g.n - 2 if cutoff is None else min(cutoff, g.n - 2)
    return maxflow_matrix(cap, 2 * s + 1, 2 * t, max(limit, 0))


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    Adjacent pairs return the sentinel n-1 (no vertex cut separates
    them). ``cutoff`` stops augmenting early when only a threshold test
    is needed.
    """
    if s == t:
        raise GraphError("local connectivity needs two distinct vertices")
    if g.has_edge(s, t):
        return g.n - 1
    return _local_vc(g, _split_base(g), s, t, cutoff)


def _kappa_pairs(g: Graph) -> list[tuple[int, int]]:
    """Pair list whose local-connectivity minimum equals kappa.

    Fixed vertex 0 against its non-neighbors, plus nonadjacent pairs
    among the neighbors of 0 (covers minimum cuts containing 0).
    """
    pairs = []
    nbr0 = g.rows[0]
    for v in range(1, g.n):
        if not (nbr0 >> v) & 1:
            pairs.append((0, v))
    nbrs = list(bits(nbr0))
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if not g.has_edge(a, b):
                pairs.append((a, b))
    return pairs


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); complete graphs give n-1, disconnected graphs give 0."""
    if g.n == 0:
        raise GraphError("connectivity undefined for the empty graph")
    if g.n == 1:
        return 0
    if not is_connected(g):
        return 0
    pairs = _kappa_pairs(g)
    if not pairs:  # complete graph
        return g.n - 1
    base = _split_base(g)
    best = g.n - 1
    for s, t in pairs:
        best = min(best, _local_vc(g, base, s, t, cutoff=best))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """n >= k+1 and no vertex cut of size < k.

    Min-degree pretest, then pairwise flow with cutoff k, refuting at the
    first pair below k.
    """
    if k < 1:
        raise GraphError("is_k_connected requires k >= 1")
    if g.n < k + 1:
        return False
    if g.min_degree() < k:
        return False
    if not is_connected(g):
        return False
    base = _split_base(g)
    for s, t in _kappa_pairs(g):
        if _local_vc(g, base, s, t, cutoff=k) < k:
            return False
    return True


def min_vertex_cut(g: Graph) -> CutWitness:
    """Lexicographically smallest vertex cut of size kappa(g)."""
    if g.n < 3 or not is_connected(g):
        raise GraphError("min_vertex_cut requires a connected graph on >= 3 vertices")
    kappa = vertex_connectivity(g)
    if kappa == g.n - 1:
        raise GraphError("no vertex cut exists: graph is complete")
    # lexicographically smallest sorted kappa-subset that disconnects
    for combo in combinations(range(g.n), kappa):
        s = mask_of(combo)
        rest = delete_vertices(g, s)
        if rest.n >= 2:
            comps = components(rest)
            if len(comps) >= 2:
                # report sides in original labels
                keep = [v for v in range(g.n) if not (s >> v) & 1]
                side0 = mask_of(keep[v] for v in bits(comps[0]))
                side1 = g.full_mask() & ~s & ~side0
                return CutWitness("vertex-cut", s, None, (side0, side1))
    raise AssertionError("connectivity/cut search disagree")  # pragma: no cover


def _edge_base(g: Graph) -> np.ndarray:
    cap = np.zeros((g.n, g.n), dtype=np.int32)
    for v in range(g.n):
        for w in bits(g.rows[v]):
            cap[v, w] = 1
    return cap


def edge_connectivity(g: Graph) -> int:
    """lambda(g) as the minimum over flows from vertex 0 to every other."""
    if g.n == 0:
        raise GraphError("edge connectivity undefined for the empty graph")
    if g.n == 1:
        return 0
    if not is_connected(g):
        return 0
    base = _edge_base(g)
    best = min(g.degree(v) for v in range(g.n))
    for t in range(1, g.n):
        best = min(best, maxflow_matrix(base.copy(), 0, t, best))
        if best == 0:
            break
    return best


def is_k_edge_connected(g: Graph, k: int) -> bool:
    """lambda(g) >= k with degree pretest and early refutation."""
    if k < 1:
        raise GraphError("is_k_edge_connected requires k >= 1")
    if g.n < 2:
        return False
    if g.min_degree() < k:
        return False
    if not is_connected(g):
        return False
    base = _edge_base(g)
    for t in range(1, g.n):
        if maxflow_matrix(base.copy(), 0, t, k) < k:
            return False
    return True
