"""Numba-accelerated inner loops with pure-Python fallbacks.

Everything here is an exact algorithm; the jitted and fallback versions
implement the same logic and the test suite cross-checks them. Set
``CUTBENCH_NO_NUMBA=1`` to force the fallbacks.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    if os.environ.get("CUTBENCH_NO_NUMBA"):
        raise ImportError("numba disabled by CUTBENCH_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap


# ---------------------------------------------------------------------------
# canonical form: minimum column-packed upper-triangle code over relabelings
# ---------------------------------------------------------------------------

def _canon_cols_py(n: int, rows) -> tuple[int, ...]:
    """Reference implementation of the minimum-code search.

    Vertices are placed one position at a time; placing position j fixes
    the j adjacency bits to the already-placed prefix (MSB = position 0),
    exactly the graph6 column order, so a partial placement determines a
    bit-stream prefix that prunes against the best code found so far.
    Siblings that are interchangeable twins in the remaining graph are
    skipped.
    """
    if n <= 1:
        return ()
    best = [0] * n
    cur = [0] * n
    have_best = False

    def dfs(pos: int, tied: bool, unused: list[int], cols: dict[int, int]) -> None:
        nonlocal have_best
        cands = sorted((cols[v], v) for v in unused)
        explored: list[tuple[int, int]] = []
        for col, v in cands:
            if tied and have_best:
                b = best[pos]
                if col > b:
                    break
                t2 = col == b
            else:
                t2 = False
            rv = rows[v]
            rem = 0
            for w in unused:
                rem |= 1 << w
            skip = False
            for ucol, u in explored:
                if ucol != col:
                    continue
                ru = rows[u]
                mu = (ru & rem) & ~(1 << v) & ~(1 << u)
                mv = (rv & rem) & ~(1 << u) & ~(1 << v)
                if mu == mv:
                    skip = True
                    break
            if skip:
                continue
            cur[pos] = col
            rest = [w for w in unused if w != v]
            if not rest:
                if not t2 or not have_best:
                    best[:] = cur
                    have_best = True
            else:
                dfs(pos + 1, t2, rest,
                    {w: (cols[w] << 1) | ((rows[w] >> v) & 1) for w in rest})
            explored.append((col, v))
            tied = True

    dfs(0, False, list(range(n)), {v: 0 for v in range(n)})
    return tuple(best)


@njit(cache=True)
def _canon_cols_nb(n, rows):  # pragma: no cover - numba code path
    best = np.zeros(n, dtype=np.uint64)
    cur = np.zeros(n, dtype=np.uint64)
    cols = np.zeros((n + 1, n), dtype=np.uint64)
    cand_v = np.zeros((n, n), dtype=np.int64)
    cand_c = np.zeros((n, n), dtype=np.uint64)
    cand_n = np.zeros(n, dtype=np.int64)
    cand_i = np.zeros(n, dtype=np.int64)
    tied = np.zeros(n, dtype=np.int64)
    unused = np.zeros(n + 1, dtype=np.uint64)
    have_best = False
    one = np.uint64(1)

    unused[0] = (one << np.uint64(n)) - one
    for v in range(n):
        cand_v[0, v] = v
        cand_c[0, v] = 0
    cand_n[0] = n
    cand_i[0] = 0
    tied[0] = 0

    d = 0
    while d >= 0:
        i = cand_i[d]
        if i >= cand_n[d]:
            d -= 1
            continue
        col = cand_c[d, i]
        v = cand_v[d, i]
        t = tied[d]
        if t == 1 and have_best:
            b = best[d]
            if col > b:
                cand_i[d] = cand_n[d]
                continue
            t2 = 1 if col == b else 0
        else:
            t2 = 0
        cand_i[d] = i + 1
        rem = unused[d]
        rv = rows[v]
        skip = False
        for j in range(i):
            if cand_c[d, j] != col:
                continue
            u = cand_v[d, j]
            ru = rows[u]
            mu = (ru & rem) & ~(one << np.uint64(v)) & ~(one << np.uint64(u))
            mv = (rv & rem) & ~(one << np.uint64(u)) & ~(one << np.uint64(v))
            if mu == mv:
                skip = True
                break
        if skip:
            continue
        cur[d] = col
        nu = rem & ~(one << np.uint64(v))
        unused[d + 1] = nu
        if d + 1 == n:
            if t2 == 0 or not have_best:
                for q in range(n):
                    best[q] = cur[q]
                have_best = True
            tied[d] = 1
            continue
        cnt = 0
        m = nu
        while m != np.uint64(0):
            low = m & (~m + one)
            w = -1
            x = low
            while x != np.uint64(0):
                x >>= one
                w += 1
            m &= m - one
            c2 = (cols[d, w] << one) | ((rows[w] >> np.uint64(v)) & one)
            cols[d + 1, w] = c2
            cand_v[d + 1, cnt] = w
            cand_c[d + 1, cnt] = c2
            cnt += 1
        for a in range(1, cnt):
            cv = cand_v[d + 1, a]
            cc = cand_c[d + 1, a]
            b2 = a - 1
            while b2 >= 0 and cand_c[d + 1, b2] > cc:
                cand_c[d + 1, b2 + 1] = cand_c[d + 1, b2]
                cand_v[d + 1, b2 + 1] = cand_v[d + 1, b2]
                b2 -= 1
            cand_c[d + 1, b2 + 1] = cc
            cand_v[d + 1, b2 + 1] = cv
        cand_n[d + 1] = cnt
        cand_i[d + 1] = 0
        tied[d + 1] = t2
        tied[d] = 1
        d += 1
    return best


def canon_cols(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Column values (position j holds j bits) of the minimal code."""
    if n <= 1:
        return ()
    if HAVE_NUMBA:
        arr = np.array(rows, dtype=np.uint64)
        return tuple(int(x) for x in _canon_cols_nb(n, arr))
    return _canon_cols_py(n, rows)


# ---------------------------------------------------------------------------
# unit-capacity max flow (Menger) with cutoff
# ---------------------------------------------------------------------------

def _maxflow_matrix_py(cap, size: int, s: int, t: int, cutoff: int) -> int:
    """Edmonds-Karp on a dense capacity matrix, stopping at ``cutoff``."""
    flow = 0
    while flow < cutoff:
        parent = [-1] * size
        parent[s] = s
        queue = [s]
        qi = 0
        while qi < len(queue) and parent[t] == -1:
            u = queue[qi]
            qi += 1
            cu = cap[u]
            for v in range(size):
                if cu[v] > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= 1
            cap[v][u] += 1
            v = u
        flow += 1
    return flow


@njit(cache=True)
def _maxflow_matrix_nb(cap, size, s, t, cutoff):  # pragma: no cover
    flow = 0
    parent = np.empty(size, dtype=np.int32)
    queue = np.empty(size, dtype=np.int32)
    while flow < cutoff:
        for i in range(size):
            parent[i] = -1
        parent[s] = s
        queue[0] = s
        qn = 1
        qi = 0
        while qi < qn and parent[t] == -1:
            u = queue[qi]
            qi += 1
            for v in range(size):
                if cap[u, v] > 0 and parent[v] == -1:
                    parent[v] = u
                    queue[qn] = v
                    qn += 1
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            cap[u, v] -= 1
            cap[v, u] += 1
            v = u
        flow += 1
    return flow


def maxflow_matrix(cap: np.ndarray, s: int, t: int, cutoff: int) -> int:
    """Max flow s->t on an int32 capacity matrix, capped at ``cutoff``."""
    size = cap.shape[0]
    if HAVE_NUMBA:
        return int(_maxflow_matrix_nb(cap, size, s, t, cutoff))
    return _maxflow_matrix_py([list(map(int, row)) for row in cap], size, s, t, cutoff)
