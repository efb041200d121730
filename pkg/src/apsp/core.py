"""Extended-cost arithmetic and the dense matrix containers shared by every solver.

Costs are integers extended with a single Infinity element (unreachable).
Internally a finite cost is stored as a plain int64 and Infinity as the
sentinel ``INF_RAW``; addition saturates at Infinity and raises once a finite
sum would leave the representable range, so overflow can never masquerade as
a reachable distance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Infinity sentinel and the largest storable finite cost.  Two legal finite
# values always sum below INF_RAW, and INF_RAW + MAX_FINITE_COST stays well
# below int64 overflow, so kernel arithmetic never wraps.
INF_RAW: int = 1 << 61
MAX_FINITE_COST: int = (1 << 60) - 1


class ApspError(Exception):
    """Base class for all errors raised by this package."""


class MalformedGraphError(ApspError):
    """Graph violates its invariants (bad index, duplicate edge, bad weight)."""


class DimensionError(ApspError):
    """Matrix dimensions empty, mismatched, or not conformable."""


class CostRangeError(ApspError):
    """A finite cost left the representable range."""


class CapacityError(ApspError):
    """Input exceeds a configured size cap (e.g. the cubic-memory reference)."""


class NegativeWeightError(ApspError):
    """A solver received a negative finite cost."""


class CorruptPredError(ApspError):
    """Predecessor matrix is inconsistent with its distance matrix."""


class CorruptViaError(ApspError):
    """Via matrix is inconsistent with its distance matrix or graph."""


class ParameterError(ApspError):
    """Invalid generator or benchmark parameters."""


class ExtCost:
    """An integer cost or the distinguished Infinity element.

    Addition saturates: ``INF + x == INF`` for every x.  Finite sums that
    would exceed ``MAX_FINITE_COST`` raise :class:`CostRangeError` instead of
    wrapping.  Total order puts Infinity above every finite value.
    """

    __slots__ = ("_raw",)

    INFINITY: "ExtCost"

    def __init__(self, value: int):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise TypeError(f"cost must be an integer, got {type(value).__name__}")
        value = int(value)
        if not -MAX_FINITE_COST <= value <= MAX_FINITE_COST:
            raise CostRangeError(f"cost {value} outside representable range")
        self._raw = value

    @classmethod
    def _from_raw(cls, raw: int) -> "ExtCost":
        if raw == INF_RAW:
            return cls.INFINITY
        return cls(raw)

    @property
    def is_infinite(self) -> bool:
        return self._raw == INF_RAW

    @property
    def value(self) -> int:
        """The finite integer value; raises on Infinity."""
        if self._raw == INF_RAW:
            raise ValueError("Infinity has no finite value")
        return self._raw

    def __add__(self, other: "ExtCost") -> "ExtCost":
        if not isinstance(other, ExtCost):
            return NotImplemented
        if self._raw == INF_RAW or other._raw == INF_RAW:
            return ExtCost.INFINITY
        total = self._raw + other._raw
        if not -MAX_FINITE_COST <= total <= MAX_FINITE_COST:
            raise CostRangeError(f"finite sum {total} outside representable range")
        return ExtCost(total)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExtCost):
            return NotImplemented
        return self._raw == other._raw

    def __lt__(self, other: "ExtCost") -> bool:
        if not isinstance(other, ExtCost):
            return NotImplemented
        return self._raw < other._raw

    def __le__(self, other: "ExtCost") -> bool:
        if not isinstance(other, ExtCost):
            return NotImplemented
        return self._raw <= other._raw

    def __gt__(self, other: "ExtCost") -> bool:
        if not isinstance(other, ExtCost):
            return NotImplemented
        return self._raw > other._raw

    def __ge__(self, other: "ExtCost") -> bool:
        if not isinstance(other, ExtCost):
            return NotImplemented
        return self._raw >= other._raw

    def __hash__(self) -> int:
        return hash(self._raw)

    def __repr__(self) -> str:
        if self._raw == INF_RAW:
            return "INF"
        return f"ExtCost({self._raw})"


# Singleton built through __new__ to bypass the finite-range check.
_inf = ExtCost.__new__(ExtCost)
_inf._raw = INF_RAW
ExtCost.INFINITY = _inf
INF: ExtCost = ExtCost.INFINITY
del _inf


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _check_cost_range(cells: np.ndarray) -> None:
    finite = cells != INF_RAW
    if finite.any():
        fvals = cells[finite]
        if int(fvals.max()) > MAX_FINITE_COST or int(fvals.min()) < -MAX_FINITE_COST:
            raise CostRangeError("finite cell outside representable range")


class CostMatrix:
    """Dense matrix of extended costs; row = source, column = target.

    Immutable once constructed.  Square graph-derived matrices carry a zero
    diagonal; rectangular matrices arise as operands of block products.
    """

    __slots__ = ("_cells",)

    def __init__(self, cells: np.ndarray, *, _validated: bool = False):
        cells = np.asarray(cells)
        if cells.ndim != 2 or cells.size == 0:
            raise DimensionError(f"cost matrix must be 2-D and non-empty, got shape {cells.shape}")
        if cells.dtype != np.int64:
            cells = cells.astype(np.int64)
        if not _validated:
            _check_cost_range(cells)
        self._cells = _freeze(cells)

    @classmethod
    def from_rows(cls, rows) -> "CostMatrix":
        """Build from nested sequences of ints and/or ExtCost (incl. INF)."""
        n_rows = len(rows)
        if n_rows == 0:
            raise DimensionError("cost matrix must be non-empty")
        n_cols = len(rows[0])
        cells = np.empty((n_rows, n_cols), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionError("ragged rows in cost matrix")
            for j, v in enumerate(row):
                if isinstance(v, ExtCost):
                    cells[i, j] = INF_RAW if v.is_infinite else v.value
                elif isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                    raise TypeError(f"cell ({i},{j}) must be int or ExtCost")
                else:
                    cells[i, j] = int(v)
        return cls(cells)

    @property
    def raw(self) -> np.ndarray:
        """Read-only int64 view with INF_RAW encoding Infinity."""
        return self._cells

    @property
    def shape(self) -> tuple[int, int]:
        return self._cells.shape  # type: ignore[return-value]

    @property
    def n_rows(self) -> int:
        return self._cells.shape[0]

    @property
    def n_cols(self) -> int:
        return self._cells.shape[1]

    @property
    def n(self) -> int:
        """Vertex count for square matrices."""
        r, c = self._cells.shape
        if r != c:
            raise DimensionError(f"matrix is {r}x{c}, not square")
        return r

    def __getitem__(self, ij: tuple[int, int]) -> ExtCost:
        i, j = ij
        return ExtCost._from_raw(int(self._cells[i, j]))

    def __repr__(self) -> str:
        return f"CostMatrix({self.n_rows}x{self.n_cols})"


class _IndexMatrix:
    """n x n matrix of optional vertex indices; -1 encodes None."""

    __slots__ = ("_cells",)

    def __init__(self, cells: np.ndarray):
        cells = np.asarray(cells)
        if cells.ndim != 2 or cells.size == 0:
            raise DimensionError(f"index matrix must be 2-D and non-empty, got shape {cells.shape}")
        if cells.dtype != np.int64:
            cells = cells.astype(np.int64)
        if int(cells.min(initial=0)) < -1:
            raise ValueError("index cells must be >= -1")
        self._cells = _freeze(cells)

    @classmethod
    def all_none(cls, n_rows: int, n_cols: int | None = None):
        if n_cols is None:
            n_cols = n_rows
        return cls(np.full((n_rows, n_cols), -1, dtype=np.int64))

    @property
    def raw(self) -> np.ndarray:
        return self._cells

    @property
    def shape(self) -> tuple[int, int]:
        return self._cells.shape  # type: ignore[return-value]

    @property
    def n(self) -> int:
        r, c = self._cells.shape
        if r != c:
            raise DimensionError(f"matrix is {r}x{c}, not square")
        return r

    def __getitem__(self, ij: tuple[int, int]) -> int | None:
        i, j = ij
        v = int(self._cells[i, j])
        return None if v < 0 else v


class ViaMatrix(_IndexMatrix):
    """Intermediate vertex attaining the min-plus argmin; None = direct entry."""


class PredMatrix(_IndexMatrix):
    """Last vertex before the target on a tentative shortest path."""


@dataclass(frozen=True)
class Graph:
    """Weighted directed graph: vertex count plus an edge list.

    Self-loops are implicit with cost zero and never stored.  Call
    :meth:`validate` (or any operation that does) to enforce the invariants.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __init__(self, n: int, edges=()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple((int(u), int(v), int(w)) for u, v, w in edges))

    def validate(self) -> "Graph":
        if self.n < 1:
            raise MalformedGraphError(f"vertex count must be >= 1, got {self.n}")
        seen: set[tuple[int, int]] = set()
        for u, v, w in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedGraphError(f"edge ({u},{v}) out of range for n={self.n}")
            if u == v:
                raise MalformedGraphError(f"explicit self-loop at vertex {u}")
            if (u, v) in seen:
                raise MalformedGraphError(f"duplicate edge ({u},{v})")
            if w < 1:
                raise MalformedGraphError(f"edge ({u},{v}) weight {w} < 1")
            if w > MAX_FINITE_COST:
                raise MalformedGraphError(f"edge ({u},{v}) weight {w} outside representable range")
            seen.add((u, v))
        return self

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Path:
    """An explicit vertex sequence from a query source to a query target."""

    vertices: tuple[int, ...]
    total_cost: int

    def __init__(self, vertices, total_cost: int):
        object.__setattr__(self, "vertices", tuple(int(v) for v in vertices))
        object.__setattr__(self, "total_cost", int(total_cost))

    @property
    def hop_count(self) -> int:
        return len(self.vertices) - 1


def cost_matrix_from_graph(g: Graph) -> CostMatrix:
    """Dense cost matrix: zero diagonal, edge weights, Infinity elsewhere."""
    g.validate()
    cells = np.full((g.n, g.n), INF_RAW, dtype=np.int64)
    np.fill_diagonal(cells, 0)
    for u, v, w in g.edges:
        cells[u, v] = w
    return CostMatrix(cells, _validated=True)


def minplus_identity(n: int) -> CostMatrix:
    """The min-plus identity: zero diagonal, Infinity elsewhere."""
    if n < 1:
        raise DimensionError(f"identity needs n >= 1, got {n}")
    cells = np.full((n, n), INF_RAW, dtype=np.int64)
    np.fill_diagonal(cells, 0)
    return CostMatrix(cells, _validated=True)


def matrices_equal(a: CostMatrix, b: CostMatrix) -> bool:
    """Exact cell-wise equality; Infinity equals only Infinity."""
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    return bool(np.array_equal(a.raw, b.raw))
