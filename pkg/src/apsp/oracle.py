"""Independent reference APSP, deliberately from a different algorithm family.

The solvers are all matrix methods sharing the min-plus kernel; the oracle
is a per-source label-setting sweep (Dijkstra with a binary heap over a CSR
adjacency), so a kernel bug and an oracle bug cannot mask each other.  The
oracle itself is validated on tiny graphs against exhaustive enumeration of
simple paths — the oracle's oracle.

No code is shared with the minplus module beyond the sentinel constants.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .core import (
    INF_RAW,
    MAX_FINITE_COST,
    CapacityError,
    CostMatrix,
    CostRangeError,
    Graph,
)

EXHAUSTIVE_MAX_N = 8


@njit(nogil=True, cache=True)
def _dijkstra_all(n, indptr, heads, weights, dist):
    # Per-source sweep with a manual array binary heap (lazy deletion).
    # Every successful relaxation pushes once, so m + 1 slots suffice.
    cap = len(heads) + 2
    heap_d = np.empty(cap, dtype=np.int64)
    heap_v = np.empty(cap, dtype=np.int64)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        heap_d[0] = 0
        heap_v[0] = src
        size = 1
        while size > 0:
            d = heap_d[0]
            u = heap_v[0]
            size -= 1
            heap_d[0] = heap_d[size]
            heap_v[0] = heap_v[size]
            pos = 0  # sift down
            while True:
                left = 2 * pos + 1
                if left >= size:
                    break
                small = left
                right = left + 1
                if right < size and heap_d[right] < heap_d[left]:
                    small = right
                if heap_d[small] >= heap_d[pos]:
                    break
                heap_d[pos], heap_d[small] = heap_d[small], heap_d[pos]
                heap_v[pos], heap_v[small] = heap_v[small], heap_v[pos]
                pos = small
            if d > row[u]:
                continue  # stale entry
            for e in range(indptr[u], indptr[u + 1]):
                w = heads[e]
                nd = d + weights[e]
                if nd < row[w]:
                    if nd > MAX_FINITE_COST:
                        return 1
                    row[w] = nd
                    heap_d[size] = nd
                    heap_v[size] = w
                    pos = size  # sift up
                    size += 1
                    while pos > 0:
                        parent = (pos - 1) // 2
                        if heap_d[parent] <= heap_d[pos]:
                            break
                        heap_d[pos], heap_d[parent] = heap_d[parent], heap_d[pos]
                        heap_v[pos], heap_v[parent] = heap_v[parent], heap_v[pos]
                        pos = parent
    return 0


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    m = g.n_edges
    tails = np.empty(m, dtype=np.int64)
    heads = np.empty(m, dtype=np.int64)
    weights = np.empty(m, dtype=np.int64)
    for e, (u, v, w) in enumerate(g.edges):
        tails[e] = u
        heads[e] = v
        weights[e] = w
    order = np.argsort(tails, kind="stable")
    tails, heads, weights = tails[order], heads[order], weights[order]
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.add.at(indptr, tails + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, heads, weights


def sssp_all_pairs(g: Graph) -> CostMatrix:
    """Exact APSP by an independent per-source Dijkstra sweep."""
    g.validate()
    indptr, heads, weights = _csr(g)
    dist = np.full((g.n, g.n), INF_RAW, dtype=np.int64)
    if _dijkstra_all(g.n, indptr, heads, weights, dist):
        raise CostRangeError("shortest-path cost left the representable finite range")
    return CostMatrix(dist, _validated=True)


def exhaustive_apsp(g: Graph) -> CostMatrix:
    """Minimum cost over every simple path, by brute-force enumeration."""
    g.validate()
    if g.n > EXHAUSTIVE_MAX_N:
        raise CapacityError(f"exhaustive enumeration capped at n={EXHAUSTIVE_MAX_N}, got n={g.n}")
    n = g.n
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, w in g.edges:
        adjacency[u].append((v, w))
    best = np.full((n, n), INF_RAW, dtype=np.int64)
    np.fill_diagonal(best, 0)

    def walk(src: int, at: int, cost: int, visited: int) -> None:
        for nxt, w in adjacency[at]:
            if visited & (1 << nxt):
                continue
            c = cost + w
            if c < best[src, nxt]:
                best[src, nxt] = c
            walk(src, nxt, c, visited | (1 << nxt))

    for src in range(n):
        walk(src, src, 0, 1 << src)
    return CostMatrix(best, _validated=True)
