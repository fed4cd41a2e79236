"""Canonical forms, isomorphism, isomorph-free generation, and graph6 I/O.

The canonical form of a graph is the lexicographically smallest graph6
bit stream over all vertex relabelings (found by backtracking with
prefix and twin pruning), stored as the graph6 line of that canonical
labeling. Equal forms hold exactly for isomorphic graphs, and sorting
forms sorts by (order, canonical bits).

Generation works level by level: every isomorphism class on m vertices
arises by attaching a new vertex to some class on m-1 vertices, so
augmenting each representative over all neighbor masks and deduplicating
on canonical form is exhaustive. Filters are pushed down: for connected
output the parent chain stays within connected graphs (every connected
graph has a non-cutvertex), and a min-degree d target admits the
lookahead "at level m every vertex needs degree >= d - (n - m)" since
each later vertex adds at most one to any degree.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from ._kernels import canon_cols
from .graphs import Graph, GraphError, bits

MAX_CANON_N = 12
MAX_GEN_N = 10


class Graph6Error(ValueError):
    """Malformed graph6 input; carries a line number when streaming."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class CanonicalForm:
    """Relabeling-invariant key: graph6 bytes of the canonical labeling."""

    data: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data


@dataclass(frozen=True)
class GenFilter:
    """Emission filter for generation, pushed into the search."""

    connected_only: bool = False
    min_degree: int = 0


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _g6_bits(g: Graph) -> list[int]:
    # column order: x(i,j) for j = 1..n-1, i = 0..j-1
    out = []
    for j in range(1, g.n):
        for i in range(j):
            out.append((g.rows[i] >> j) & 1)
    return out


def _pack_bits(bitlist: list[int]) -> bytes:
    out = bytearray()
    for i in range(0, len(bitlist), 6):
        group = bitlist[i:i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def graph6_encode(g: Graph) -> str:
    """One-line standard graph6 text for a graph on <= 62 vertices."""
    if g.n > 62:
        raise GraphError("graph6 single-byte header supports n <= 62 only")
    return chr(g.n + 63) + _pack_bits(_g6_bits(g)).decode("ascii")


def graph6_decode(line: str, line_number: Optional[int] = None) -> Graph:
    """Inverse of ``graph6_encode``; strict about length and padding."""
    if not line:
        raise Graph6Error("empty graph6 line", line_number)
    head = ord(line[0])
    if not 63 <= head <= 126:
        raise Graph6Error(f"header byte {head} outside printable range", line_number)
    n = head - 63
    if n > 62:
        raise Graph6Error(f"order {n} exceeds 62", line_number)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[1:]
    if len(body) < nbytes:
        raise Graph6Error("truncated bit stream", line_number)
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit stream", line_number)
    bitlist = []
    for ch in body:
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"body byte {b} outside printable range", line_number)
        v = b - 63
        for shift in range(5, -1, -1):
            bitlist.append((v >> shift) & 1)
    if any(bitlist[nbits:]):
        raise Graph6Error("nonzero padding bits", line_number)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitlist[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def read_graph6_stream(source: Iterable[str], on_error: str = "abort") -> Iterator[Graph]:
    """Decode each nonempty line; ``on_error`` is "abort" or "skip"."""
    if on_error not in ("abort", "skip"):
        raise ValueError("on_error must be 'abort' or 'skip'")
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield graph6_decode(line, line_number=lineno)
        except Graph6Error:
            if on_error == "abort":
                raise


# ---------------------------------------------------------------------------
# canonical forms and isomorphism
# ---------------------------------------------------------------------------

def _cols_to_g6(n: int, cols: tuple[int, ...]) -> str:
    bitlist = []
    for j in range(1, n):
        col = cols[j]
        for shift in range(j - 1, -1, -1):
            bitlist.append((col >> shift) & 1)
    return chr(n + 63) + _pack_bits(bitlist).decode("ascii")


def canonical_form(g: Graph) -> CanonicalForm:
    """Minimal graph6 code over all relabelings (exact, n <= 12)."""
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical form supported for n <= {MAX_CANON_N}")
    cols = canon_cols(g.n, g.rows)
    return CanonicalForm(_cols_to_g6(g.n, cols).encode("ascii"))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return graph6_decode(canonical_form(g).data.decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Canonical-form equality with cheap rejects first."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def permute(g: Graph, perm: list[int]) -> Graph:
    """Relabel: vertex v of g becomes perm[v]."""
    rows = [0] * g.n
    for v in range(g.n):
        for w in bits(g.rows[v]):
            rows[perm[v]] |= 1 << perm[w]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# isomorph-free generation
# ---------------------------------------------------------------------------

# (m, connected_only, effective_min_degree) -> sorted tuple of canonical g6 bytes
_LEVEL_CACHE: dict[tuple[int, bool, int], tuple[bytes, ...]] = {}


def _submasks(free: int) -> Iterator[int]:
    sub = free
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def _augment_parent(parent: Graph, conn: bool, min_deg: int) -> set[bytes]:
    """Canonical forms of all filtered one-vertex extensions of parent."""
    m = parent.n + 1
    new = m - 1
    degs = [parent.degree(v) for v in range(parent.n)]
    required = 0
    for v in range(parent.n):
        if degs[v] < min_deg:
            required |= 1 << v
    free = ((1 << parent.n) - 1) & ~required
    out: set[bytes] = set()
    for sub in _submasks(free):
        mask = required | sub
        if mask.bit_count() < min_deg:
            continue
        if conn and mask == 0:
            continue
        rows = list(parent.rows) + [mask]
        for v in bits(mask):
            rows[v] |= 1 << new
        child = Graph(m, tuple(rows))
        out.add(canonical_form(child).data)
    return out


def _augment_chunk(args: tuple[list[bytes], bool, int]) -> set[bytes]:
    parents, conn, min_deg = args
    out: set[bytes] = set()
    for p in parents:
        out |= _augment_parent(graph6_decode(p.decode("ascii")), conn, min_deg)
    return out


def _single_vertex_level(conn: bool, min_deg: int) -> tuple[bytes, ...]:
    if min_deg > 0:
        return ()
    return (graph6_encode(Graph(1, (0,))).encode("ascii"),)


def _find_superset_level(m: int, conn: bool, min_deg: int) -> Optional[tuple[bytes, ...]]:
    best = None
    for (cm, cc, cd), forms in _LEVEL_CACHE.items():
        if cm != m or cd > min_deg:
            continue
        if cc and not conn:
            continue
        if best is None or len(forms) < len(best):
            best = forms
    return best


def _level(m: int, conn: bool, min_deg: int, workers: int = 1) -> tuple[bytes, ...]:
    key = (m, conn, max(min_deg, 0))
    cached = _LEVEL_CACHE.get(key)
    if cached is not None:
        return cached
    min_deg = max(min_deg, 0)
    if m == 1:
        result = _single_vertex_level(conn, min_deg)
        _LEVEL_CACHE[key] = result
        return result
    superset = _find_superset_level(m, conn, min_deg)
    if superset is not None:
        out = []
        for form in superset:
            g = graph6_decode(form.decode("ascii"))
            if g.min_degree() < min_deg:
                continue
            if conn:
                from .graphs import is_connected
                if not is_connected(g):
                    continue
            out.append(form)
        result = tuple(out)
        _LEVEL_CACHE[key] = result
        return result
    parents = _level(m - 1, conn, min_deg - 1, workers)
    forms: set[bytes] = set()
    if workers > 1 and len(parents) >= 64:
        chunk = max(1, len(parents) // (workers * 8))
        jobs = [(list(parents[i:i + chunk]), conn, min_deg)
                for i in range(0, len(parents), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_augment_chunk, jobs):
                forms |= part
    else:
        for p in parents:
            forms |= _augment_parent(graph6_decode(p.decode("ascii")), conn, min_deg)
    result = tuple(sorted(forms))
    _LEVEL_CACHE[key] = result
    return result


def generate_all(n: int, gen_filter: GenFilter = GenFilter(), workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on n vertices.

    Emitted in sorted canonical-form order regardless of worker count.
    """
    if not 1 <= n <= MAX_GEN_N:
        raise GraphError(f"generation supported for 1 <= n <= {MAX_GEN_N}")
    if gen_filter.min_degree > max(n - 1, 0):
        return
    for form in _level(n, gen_filter.connected_only, gen_filter.min_degree, workers):
        yield graph6_decode(form.decode("ascii"))


def generation_forms(n: int, gen_filter: GenFilter = GenFilter(), workers: int = 1) -> tuple[bytes, ...]:
    """Canonical graph6 forms (sorted) of the classes ``generate_all`` emits."""
    if not 1 <= n <= MAX_GEN_N:
        raise GraphError(f"generation supported for 1 <= n <= {MAX_GEN_N}")
    if gen_filter.min_degree > max(n - 1, 0):
        return ()
    return _level(n, gen_filter.connected_only, gen_filter.min_degree, workers)


def clear_generation_cache() -> None:
    _LEVEL_CACHE.clear()
