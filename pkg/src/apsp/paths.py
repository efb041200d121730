"""Explicit shortest-path reconstruction from predecessor or via matrices.

Two routes exist because the solvers natively produce different artifacts:
fw_classic maintains a predecessor matrix (backtrack from the target), while
the min-plus solvers produce a via matrix (recursively expand the pair
through its argmin midpoint; None means the direct edge).  For a pair with
several equally short paths the two routes may return different vertex
sequences with the same total cost.

Unreachable pairs are reported as None, exactly when the distance entry is
Infinity.  Inconsistent matrices raise CorruptPredError / CorruptViaError
rather than looping or fabricating a path.
"""

from __future__ import annotations

from .core import (
    CorruptPredError,
    CorruptViaError,
    CostMatrix,
    DimensionError,
    Graph,
    Path,
    PredMatrix,
    ViaMatrix,
)


def _check_pair(n: int, source: int, target: int) -> None:
    if not (0 <= source < n and 0 <= target < n):
        raise IndexError(f"vertex pair ({source},{target}) out of range for n={n}")


def path_from_pred(
    pred: PredMatrix, distances: CostMatrix, source: int, target: int
) -> Path | None:
    """Backtrack target <- pred[source][target] until the source is reached.

    Returns None when the target is unreachable.  More than n backtracking
    steps, or a missing predecessor mid-path, mean the matrices do not
    belong together and raise CorruptPredError.
    """
    n = distances.n
    if pred.shape != distances.shape:
        raise DimensionError(f"pred shape {pred.shape} != distances shape {distances.shape}")
    _check_pair(n, source, target)
    if source == target:
        return Path((source,), 0)
    if distances[source, target].is_infinite:
        return None
    reversed_vertices = [target]
    cursor = target
    while cursor != source:
        if len(reversed_vertices) > n:
            raise CorruptPredError(f"backtracking from {target} exceeded {n} steps")
        step = pred[source, cursor]
        if step is None:
            raise CorruptPredError(
                f"pred[{source}][{cursor}] is None but distance to {target} is finite"
            )
        reversed_vertices.append(step)
        cursor = step
    return Path(tuple(reversed(reversed_vertices)), distances[source, target].value)


def path_from_via(
    via: ViaMatrix, distances: CostMatrix, graph: Graph, source: int, target: int
) -> Path | None:
    """Expand (source,target) through via midpoints down to direct edges.

    A None via cell asserts a direct edge exists in the graph; a finite
    distance without that edge, or expansion nesting deeper than n, raises
    CorruptViaError.  Total cost is summed from the actual edge weights.
    """
    n = distances.n
    if via.shape != distances.shape:
        raise DimensionError(f"via shape {via.shape} != distances shape {distances.shape}")
    _check_pair(n, source, target)
    if source == target:
        return Path((source,), 0)
    if distances[source, target].is_infinite:
        return None
    edge_weight = {(u, v): w for u, v, w in graph.edges}
    vertices = [source]
    total = 0
    # Explicit stack (left span above right) so emission order is the path
    # order; depth counts splits along one branch and bounds any cycle.
    stack: list[tuple[int, int, int]] = [(source, target, 0)]
    while stack:
        i, j, depth = stack.pop()
        if depth > n:
            raise CorruptViaError(f"via expansion of ({source},{target}) nested deeper than n={n}")
        k = via[i, j]
        if k is None:
            w = edge_weight.get((i, j))
            if w is None:
                raise CorruptViaError(
                    f"via[{i}][{j}] is None but the graph has no direct edge ({i},{j})"
                )
            vertices.append(j)
            total += w
        else:
            stack.append((k, j, depth + 1))
            stack.append((i, k, depth + 1))
    return Path(tuple(vertices), total)
