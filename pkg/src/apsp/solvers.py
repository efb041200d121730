"""Three exact APSP solvers over one input/output contract.

* :func:`fw_classic` — textbook Floyd-Warshall: n sequential major
  iterations over the intermediate vertex k, the (i,j) plane banded across
  workers per k.  Tracks a predecessor matrix.
* :func:`fw_squaring` — repeated min-plus squaring of the cost matrix until
  it stops changing; the closure is a fixed point, so exact integer equality
  is the convergence test.  Tracks a via matrix folded across rounds.
* :func:`rkleene` — recursive blocked closure: close the leading block,
  propagate through the off-diagonal blocks, close the trailing block,
  propagate back.  Via cells carry global vertex indices at every level.

All three require a square, zero-diagonal, nonnegative cost matrix, never
mutate their input, and produce bitwise-identical distance matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import (
    INF_RAW,
    MAX_FINITE_COST,
    ApspError,
    CostMatrix,
    CostRangeError,
    MalformedGraphError,
    NegativeWeightError,
    ParameterError,
    PredMatrix,
    ViaMatrix,
    matrices_equal,
)
from .minplus import (
    DEFAULT_TILE_SIZE,
    MinPlusResult,
    _resolve_workers,
    _run_bands,
    minplus_accumulate,
    minplus_product,
)

DEFAULT_BASE_THRESHOLD = 64


@dataclass(frozen=True)
class ApspSolution:
    """Closed distance matrix plus reconstruction data and instrumentation.

    Exactly one of via/pred is present: pred for fw_classic, via for
    fw_squaring and rkleene.  ``iterations`` counts outer min-plus rounds and
    is meaningful for fw_squaring only (0 elsewhere).  ``relaxation_count``
    is the exact number of scalar candidate evaluations.
    """

    distances: CostMatrix
    via: ViaMatrix | None
    pred: PredMatrix | None
    iterations: int
    relaxation_count: int
    algorithm: str


def _validate_solver_input(h: CostMatrix) -> int:
    n = h.n
    raw = h.raw
    if raw.min() < 0:
        raise NegativeWeightError("solver input contains a negative finite cost")
    if np.diagonal(raw).any():
        raise MalformedGraphError("solver input must have a zero diagonal")
    return n


@njit(nogil=True, cache=True)
def _fw_step_band(dist, pred, k, i0, i1):
    # One major iteration k restricted to rows [i0, i1), in place.  Row k and
    # column k are never written during step k (zero diagonal, nonnegative
    # costs), so concurrent bands only race on cells they own.  Returns 1 if
    # an improvement would leave the finite range.
    n = dist.shape[0]
    for i in range(i0, i1):
        dik = dist[i, k]
        if dik >= INF_RAW:
            continue
        for j in range(n):
            c = dik + dist[k, j]
            if c < dist[i, j]:
                if c > MAX_FINITE_COST:
                    return 1
                dist[i, j] = c
                pred[i, j] = pred[k, j]
    return 0


@njit(nogil=True, cache=True)
def _fw_via_block(dist, via, lo, hi):
    # Serial Floyd-Warshall on the diagonal block [lo,hi) of the full
    # arrays, recording the improving intermediate vertex k (already a
    # global index) instead of a predecessor.
    for k in range(lo, hi):
        for i in range(lo, hi):
            dik = dist[i, k]
            if dik >= INF_RAW:
                continue
            for j in range(lo, hi):
                c = dik + dist[k, j]
                if c < dist[i, j]:
                    if c > MAX_FINITE_COST:
                        return 1
                    dist[i, j] = c
                    via[i, j] = k
    return 0


def fw_classic(
    h: CostMatrix,
    *,
    tile_size: int = DEFAULT_TILE_SIZE,
    workers: int | None = None,
) -> ApspSolution:
    """Classic Floyd-Warshall with predecessor tracking.

    pred[i][j] starts as i wherever h[i][j] is finite off the diagonal; a
    strict improvement through k copies pred[k][j].  The k-loop is strictly
    sequential; each step parallelizes over row bands.
    """
    n = _validate_solver_input(h)
    if tile_size < 1:
        raise ParameterError(f"tile_size must be >= 1, got {tile_size}")
    workers = _resolve_workers(workers)
    dist = h.raw.copy()
    finite = dist != INF_RAW
    np.fill_diagonal(finite, False)
    pred = np.where(finite, np.arange(n, dtype=np.int64)[:, None], np.int64(-1))
    for k in range(n):
        status = []
        _run_bands(
            n,
            tile_size,
            workers,
            lambda i0, i1: status.append(_fw_step_band(dist, pred, k, i0, i1)),
        )
        if any(status):
            raise CostRangeError("shortest-path cost left the representable finite range")
    return ApspSolution(
        distances=CostMatrix(dist, _validated=True),
        via=None,
        pred=PredMatrix(pred),
        iterations=0,
        relaxation_count=n * n * n,
        algorithm="fw_classic",
    )


def _fold_improvements(dist_block: np.ndarray, via_block: np.ndarray, res: MinPlusResult) -> None:
    # A product's via cell replaces the accumulated one only where the
    # product strictly improved the block; distances take the new values
    # unconditionally (the step semantics are plain assignment).
    improved = res.distances.raw < dist_block
    via_block[improved] = res.via.raw[improved]
    dist_block[...] = res.distances.raw


def fw_squaring(
    h: CostMatrix,
    *,
    tile_size: int = DEFAULT_TILE_SIZE,
    workers: int | None = None,
) -> ApspSolution:
    """APSP by repeated min-plus squaring: H <- H (x) H until unchanged.

    Each round doubles the hop horizon, so the round count never exceeds
    ceil(log2(max(n-1, 1))) + 1 — the final round is the unchanged
    confirmation pass and is included in ``iterations``.
    """
    n = _validate_solver_input(h)
    current = h
    via = np.full((n, n), -1, dtype=np.int64)
    iterations = 0
    relaxations = 0
    limit = n + 1
    while True:
        res = minplus_product(current, current, tile_size=tile_size, workers=workers)
        iterations += 1
        relaxations += res.relaxation_count
        improved = res.distances.raw < current.raw
        via[improved] = res.via.raw[improved]
        converged = matrices_equal(res.distances, current)
        current = res.distances
        if converged:
            break
        if iterations > limit:  # unreachable for integer costs; guards a hang
            raise ApspError(f"squaring failed to converge within {limit} rounds")
    return ApspSolution(
        distances=current,
        via=ViaMatrix(via),
        pred=None,
        iterations=iterations,
        relaxation_count=relaxations,
        algorithm="fw_squaring",
    )


def rkleene(
    h: CostMatrix,
    *,
    base_threshold: int = DEFAULT_BASE_THRESHOLD,
    tile_size: int = DEFAULT_TILE_SIZE,
    workers: int | None = None,
) -> ApspSolution:
    """Recursive blocked APSP (split at floor(n/2), blocks [A B; C D]).

    1. close A recursively
    2. B <- A(x)B ; C <- C(x)A ; D <- min(D, C(x)B)
    3. close D recursively
    4. B <- B(x)D ; C <- D(x)C ; A <- min(A, B(x)C)

    Blocks of side <= base_threshold fall back to an in-place
    Floyd-Warshall that records via cells directly.  B and C take plain
    products (a closed block's zero diagonal makes the product dominate the
    old value); D and A use the fused accumulate.
    """
    n = _validate_solver_input(h)
    if base_threshold < 1:
        raise ParameterError(f"base_threshold must be >= 1, got {base_threshold}")
    if tile_size < 1:
        raise ParameterError(f"tile_size must be >= 1, got {tile_size}")
    resolved_workers = _resolve_workers(workers)
    dist = h.raw.copy()
    via = np.full((n, n), -1, dtype=np.int64)
    relaxations = 0

    def snap(r0: int, r1: int, c0: int, c1: int) -> CostMatrix:
        return CostMatrix(dist[r0:r1, c0:c1].copy(), _validated=True)

    def close(lo: int, hi: int) -> None:
        nonlocal relaxations
        m = hi - lo
        if m <= base_threshold:
            if _fw_via_block(dist, via, lo, hi):
                raise CostRangeError("shortest-path cost left the representable finite range")
            relaxations += m * m * m
            return
        mid = lo + m // 2
        kw = dict(tile_size=tile_size, workers=resolved_workers)

        close(lo, mid)
        res = minplus_product(snap(lo, mid, lo, mid), snap(lo, mid, mid, hi), offsets=(lo, lo, mid), **kw)
        _fold_improvements(dist[lo:mid, mid:hi], via[lo:mid, mid:hi], res)
        relaxations += res.relaxation_count
        res = minplus_product(snap(mid, hi, lo, mid), snap(lo, mid, lo, mid), offsets=(mid, lo, lo), **kw)
        _fold_improvements(dist[mid:hi, lo:mid], via[mid:hi, lo:mid], res)
        relaxations += res.relaxation_count
        res = minplus_accumulate(
            snap(mid, hi, mid, hi),
            snap(mid, hi, lo, mid),
            snap(lo, mid, mid, hi),
            via=ViaMatrix(via[mid:hi, mid:hi].copy()),
            inner_offset=lo,
            **kw,
        )
        dist[mid:hi, mid:hi] = res.distances.raw
        via[mid:hi, mid:hi] = res.via.raw
        relaxations += res.relaxation_count

        close(mid, hi)
        res = minplus_product(snap(lo, mid, mid, hi), snap(mid, hi, mid, hi), offsets=(lo, mid, mid), **kw)
        _fold_improvements(dist[lo:mid, mid:hi], via[lo:mid, mid:hi], res)
        relaxations += res.relaxation_count
        res = minplus_product(snap(mid, hi, mid, hi), snap(mid, hi, lo, mid), offsets=(mid, mid, lo), **kw)
        _fold_improvements(dist[mid:hi, lo:mid], via[mid:hi, lo:mid], res)
        relaxations += res.relaxation_count
        res = minplus_accumulate(
            snap(lo, mid, lo, mid),
            snap(lo, mid, mid, hi),
            snap(mid, hi, lo, mid),
            via=ViaMatrix(via[lo:mid, lo:mid].copy()),
            inner_offset=mid,
            **kw,
        )
        dist[lo:mid, lo:mid] = res.distances.raw
        via[lo:mid, lo:mid] = res.via.raw
        relaxations += res.relaxation_count

    close(0, n)
    return ApspSolution(
        distances=CostMatrix(dist, _validated=True),
        via=ViaMatrix(via),
        pred=None,
        iterations=0,
        relaxation_count=relaxations,
        algorithm="rkleene",
    )


def detect_negative_cycle(distances: CostMatrix) -> bool:
    """True iff any diagonal cell of a closed distance matrix is negative.

    The solvers reject negative inputs outright; this guard is the seam for
    a future signed-weight relaxation.
    """
    return bool((np.diagonal(distances.raw) < 0).any())


SOLVERS = {
    "fw_classic": fw_classic,
    "fw_squaring": fw_squaring,
    "rkleene": rkleene,
}
