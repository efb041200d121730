"""The min-plus matrix product with argmin tracking.

Two implementations share one contract:

* :func:`minplus_product` / :func:`minplus_accumulate` — the production
  kernel.  The output is partitioned into row-band tiles that are assigned
  to a worker pool; each cell's reduction over k runs in ascending-k order
  inside exactly one worker, so the result is bitwise identical for every
  tile size and worker count.
* :func:`minplus_broadcast_reference` — a deliberately literal pipeline that
  materializes the full n^3 candidate tensor and reduces it with min/argmin.
  It exists as a cross-check oracle and to expose the cubic memory wall, so
  it is capped by size and is never the production path.

Via cells record the intermediate vertex attaining the argmin (smallest k on
ties); a cell stays None when the best value is Infinity or is already
attained without a proper intermediate.  Block products pass index offsets
so via cells always carry global vertex numbers.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import (
    INF_RAW,
    MAX_FINITE_COST,
    CapacityError,
    CostMatrix,
    DimensionError,
    CostRangeError,
    NegativeWeightError,
    ParameterError,
    ViaMatrix,
)

DEFAULT_TILE_SIZE = 64
BROADCAST_CAP = 256


@dataclass(frozen=True)
class MinPlusResult:
    """Product distances, the argmin via matrix, and exact candidate count."""

    distances: CostMatrix
    via: ViaMatrix
    relaxation_count: int


def default_workers() -> int:
    """Worker count from APSP_WORKERS, else the CPU count."""
    env = os.environ.get("APSP_WORKERS")
    if env is not None:
        try:
            w = int(env)
        except ValueError as exc:
            raise ParameterError(f"APSP_WORKERS must be an integer, got {env!r}") from exc
        if w < 1:
            raise ParameterError(f"APSP_WORKERS must be >= 1, got {w}")
        return w
    return os.cpu_count() or 1


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        return default_workers()
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}")
    return workers


@njit(nogil=True, cache=True)
def _product_band(x, y, dist, via, i0, i1, row_off, inner_off, col_off):
    # Rows [i0, i1): full reduction over k in ascending order, strict
    # improvement only, so ties resolve to the smallest k.  A trailing pass
    # clears via where k == global i or k == global j attains the minimum
    # (the value was already present without a proper intermediate).
    n2 = x.shape[1]
    n3 = y.shape[1]
    for i in range(i0, i1):
        for j in range(n3):
            dist[i, j] = INF_RAW
            via[i, j] = -1
        for k in range(n2):
            xik = x[i, k]
            if xik >= INF_RAW:
                continue
            gk = k + inner_off
            for j in range(n3):
                c = xik + y[k, j]
                if c < dist[i, j]:
                    dist[i, j] = c
                    via[i, j] = gk
        ti = i + row_off - inner_off
        for j in range(n3):
            best = dist[i, j]
            if best >= INF_RAW:
                continue
            if 0 <= ti < n2 and x[i, ti] < INF_RAW and y[ti, j] < INF_RAW:
                if x[i, ti] + y[ti, j] == best:
                    via[i, j] = -1
                    continue
            tj = j + col_off - inner_off
            if 0 <= tj < n2 and x[i, tj] < INF_RAW and y[tj, j] < INF_RAW:
                if x[i, tj] + y[tj, j] == best:
                    via[i, j] = -1


@njit(nogil=True, cache=True)
def _accumulate_band(x, y, z, via_in, dist, via, i0, i1, inner_off):
    # Fused form: dist starts from z and via from via_in; both change only
    # on strict improvement, ascending k, smallest winning k on ties.
    n2 = x.shape[1]
    n3 = y.shape[1]
    for i in range(i0, i1):
        for j in range(n3):
            dist[i, j] = z[i, j]
            via[i, j] = via_in[i, j]
        for k in range(n2):
            xik = x[i, k]
            if xik >= INF_RAW:
                continue
            gk = k + inner_off
            for j in range(n3):
                c = xik + y[k, j]
                if c < dist[i, j]:
                    dist[i, j] = c
                    via[i, j] = gk


def _run_bands(n_rows: int, tile_size: int, workers: int, task) -> None:
    """Run task(i0, i1) over row bands, chunked across the worker pool."""
    bands = [(s, min(s + tile_size, n_rows)) for s in range(0, n_rows, tile_size)]
    if workers == 1 or len(bands) == 1:
        for i0, i1 in bands:
            task(i0, i1)
        return

    def worker(idx: int) -> None:
        for i0, i1 in bands[idx::workers]:
            task(i0, i1)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for f in [pool.submit(worker, w) for w in range(workers)]:
            f.result()


def _require_nonnegative(raw: np.ndarray, name: str) -> None:
    if raw.min() < 0:
        raise NegativeWeightError(f"{name} contains a negative finite cost")


def _check_product_output(dist: np.ndarray) -> None:
    # Single sums of two legal finite cells stay below INF_RAW, so anything
    # finite past MAX_FINITE_COST is a genuine range overflow, never a wrap.
    finite = dist != INF_RAW
    if finite.any() and int(dist[finite].max()) > MAX_FINITE_COST:
        raise CostRangeError("product cost left the representable finite range")


def minplus_product(
    x: CostMatrix,
    y: CostMatrix,
    *,
    tile_size: int = DEFAULT_TILE_SIZE,
    workers: int | None = None,
    offsets: tuple[int, int, int] = (0, 0, 0),
) -> MinPlusResult:
    """Min-plus product: distances[i][j] = min over k of x[i][k] + y[k][j].

    ``offsets`` = (row, inner, col) maps local indices to global vertex
    numbers for block products; via cells are reported in global numbers.
    """
    if x.n_cols != y.n_rows:
        raise DimensionError(f"inner dimensions disagree: {x.shape} x {y.shape}")
    if tile_size < 1:
        raise ParameterError(f"tile_size must be >= 1, got {tile_size}")
    workers = _resolve_workers(workers)
    xr, yr = x.raw, y.raw
    _require_nonnegative(xr, "left operand")
    _require_nonnegative(yr, "right operand")
    n1, n2 = xr.shape
    n3 = yr.shape[1]
    dist = np.empty((n1, n3), dtype=np.int64)
    via = np.empty((n1, n3), dtype=np.int64)
    row_off, inner_off, col_off = offsets
    _run_bands(
        n1,
        tile_size,
        workers,
        lambda i0, i1: _product_band(xr, yr, dist, via, i0, i1, row_off, inner_off, col_off),
    )
    _check_product_output(dist)
    return MinPlusResult(
        distances=CostMatrix(dist, _validated=True),
        via=ViaMatrix(via),
        relaxation_count=n1 * n2 * n3,
    )


def minplus_accumulate(
    z: CostMatrix,
    x: CostMatrix,
    y: CostMatrix,
    via: ViaMatrix | None = None,
    *,
    tile_size: int = DEFAULT_TILE_SIZE,
    workers: int | None = None,
    inner_offset: int = 0,
) -> MinPlusResult:
    """Fused accumulate: distances[i][j] = min(z[i][j], min_k(x[i][k] + y[k][j])).

    Via cells change only where the product strictly improves on z;
    elsewhere the caller-supplied via (default all-None) is preserved.
    """
    if x.n_cols != y.n_rows:
        raise DimensionError(f"inner dimensions disagree: {x.shape} x {y.shape}")
    if z.shape != (x.n_rows, y.n_cols):
        raise DimensionError(f"accumulator shape {z.shape} != product shape {(x.n_rows, y.n_cols)}")
    if via is None:
        via = ViaMatrix.all_none(z.n_rows, z.n_cols)
    elif via.shape != z.shape:
        raise DimensionError(f"via shape {via.shape} != accumulator shape {z.shape}")
    if tile_size < 1:
        raise ParameterError(f"tile_size must be >= 1, got {tile_size}")
    workers = _resolve_workers(workers)
    xr, yr, zr = x.raw, y.raw, z.raw
    _require_nonnegative(xr, "left operand")
    _require_nonnegative(yr, "right operand")
    _require_nonnegative(zr, "accumulator")
    n1, n2 = xr.shape
    n3 = yr.shape[1]
    dist = np.empty((n1, n3), dtype=np.int64)
    via_out = np.empty((n1, n3), dtype=np.int64)
    via_raw = via.raw
    _run_bands(
        n1,
        tile_size,
        workers,
        lambda i0, i1: _accumulate_band(xr, yr, zr, via_raw, dist, via_out, i0, i1, inner_offset),
    )
    _check_product_output(dist)
    return MinPlusResult(
        distances=CostMatrix(dist, _validated=True),
        via=ViaMatrix(via_out),
        relaxation_count=n1 * n2 * n3,
    )


def minplus_broadcast_reference(x: CostMatrix, *, max_n: int = BROADCAST_CAP) -> MinPlusResult:
    """Literal one-shot pipeline for the square product of x with itself.

    Builds the full n*n*n candidate tensor by broadcast addition, then
    reduces it by min and argmin over the middle (intermediate-vertex)
    dimension.  Output is bitwise identical to ``minplus_product(x, x)``.
    Memory is cubic, hence the size cap.
    """
    n = x.n
    if n > max_n:
        raise CapacityError(f"broadcast reference capped at n={max_n} (cubic memory), got n={n}")
    xr = x.raw
    _require_nonnegative(xr, "operand")
    tensor = xr[:, :, None] + xr[None, :, :]
    dist = tensor.min(axis=1)
    via = tensor.argmin(axis=1).astype(np.int64)
    saturated = dist >= INF_RAW
    dist[saturated] = INF_RAW
    via[saturated] = -1
    # Clear via where the minimum is attained at k == i or k == j: the value
    # was already present without a proper intermediate vertex.
    diag = xr.diagonal()
    trivial = ~saturated & ((diag[:, None] + xr == dist) | (xr + diag[None, :] == dist))
    via[trivial] = -1
    _check_product_output(dist)
    return MinPlusResult(
        distances=CostMatrix(dist, _validated=True),
        via=ViaMatrix(via),
        relaxation_count=n * n * n,
    )


def results_equal(a: MinPlusResult, b: MinPlusResult) -> bool:
    """Bitwise comparison of two kernel results, counters included."""
    return (
        a.relaxation_count == b.relaxation_count
        and a.distances.shape == b.distances.shape
        and bool(np.array_equal(a.distances.raw, b.distances.raw))
        and bool(np.array_equal(a.via.raw, b.via.raw))
    )
