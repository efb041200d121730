"""Plain-text wire formats for graphs and square cost matrices.

Graph format: first line ``n m`` (vertex and edge counts), then m lines
``u v w`` with 0-based endpoints and a positive integer weight.  Matrix
format: first line ``n``, then n lines of n fields, each a nonnegative
integer or the literal ``INF``.  Both are ASCII, single-space separated,
newline-terminated, and round-trip bit-exactly.
"""

from __future__ import annotations

import os

import numpy as np

from .core import (
    INF_RAW,
    CostMatrix,
    Graph,
    MalformedGraphError,
    DimensionError,
)


def format_graph(g: Graph) -> str:
    g.validate()
    lines = [f"{g.n} {g.n_edges}"]
    lines.extend(f"{u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedGraphError("empty graph file")
    head = lines[0].split(" ")
    if len(head) != 2:
        raise MalformedGraphError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedGraphError(f"bad header line: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedGraphError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split(" ")
        if len(parts) != 3:
            raise MalformedGraphError(f"bad edge line: {ln!r}")
        try:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise MalformedGraphError(f"bad edge line: {ln!r}") from exc
        edges.append((u, v, w))
    return Graph(n, edges).validate()


def write_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_graph(g))


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="ascii", newline="\n") as fh:
        return parse_graph(fh.read())


def format_matrix(m: CostMatrix) -> str:
    n = m.n  # square only
    raw = m.raw
    if raw.min() < 0:
        raise ValueError("matrix format holds nonnegative costs only")
    out = [str(n)]
    for i in range(n):
        row = raw[i]
        out.append(" ".join("INF" if v == INF_RAW else str(int(v)) for v in row))
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> CostMatrix:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise DimensionError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise DimensionError(f"bad size line: {lines[0]!r}") from exc
    if n < 1:
        raise DimensionError(f"matrix size must be >= 1, got {n}")
    if len(lines) - 1 != n:
        raise DimensionError(f"size line promises {n} rows, file has {len(lines) - 1}")
    cells = np.empty((n, n), dtype=np.int64)
    for i, ln in enumerate(lines[1:]):
        fields = ln.split(" ")
        if len(fields) != n:
            raise DimensionError(f"row {i} has {len(fields)} fields, expected {n}")
        for j, f in enumerate(fields):
            if f == "INF":
                cells[i, j] = INF_RAW
            else:
                v = int(f)
                if v < 0:
                    raise ValueError(f"negative cell at ({i},{j})")
                cells[i, j] = v
    return CostMatrix(cells)


def write_matrix(m: CostMatrix, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_matrix(m))


def read_matrix(path: str | os.PathLike) -> CostMatrix:
    with open(path, "r", encoding="ascii", newline="\n") as fh:
        return parse_matrix(fh.read())
