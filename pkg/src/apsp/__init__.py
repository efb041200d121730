"""Dense all-pairs shortest paths over the min-plus semiring.

Exact integer APSP via three interchangeable solvers (classic
Floyd-Warshall, repeated min-plus squaring, recursive blocked closure), an
independent Dijkstra-sweep oracle, a seeded random graph generator, path
reconstruction, and a benchmark harness.
"""

from .core import (
    INF,
    ApspError,
    CapacityError,
    CorruptPredError,
    CorruptViaError,
    CostMatrix,
    CostRangeError,
    DimensionError,
    ExtCost,
    Graph,
    MalformedGraphError,
    NegativeWeightError,
    ParameterError,
    Path,
    PredMatrix,
    ViaMatrix,
    cost_matrix_from_graph,
    matrices_equal,
    minplus_identity,
)
from .bench import BenchConfig, BenchRecord, emit_csv, emit_scatter_plot, run_benchmark
from .graphgen import GenParams, density, generate, normalize_rho
from .minplus import (
    MinPlusResult,
    minplus_accumulate,
    minplus_broadcast_reference,
    minplus_product,
)
from .oracle import exhaustive_apsp, sssp_all_pairs
from .paths import path_from_pred, path_from_via
from .solvers import ApspSolution, detect_negative_cycle, fw_classic, fw_squaring, rkleene

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ApspError",
    "ApspSolution",
    "BenchConfig",
    "BenchRecord",
    "CapacityError",
    "CorruptPredError",
    "CorruptViaError",
    "CostMatrix",
    "CostRangeError",
    "DimensionError",
    "ExtCost",
    "GenParams",
    "Graph",
    "MalformedGraphError",
    "MinPlusResult",
    "NegativeWeightError",
    "ParameterError",
    "Path",
    "PredMatrix",
    "ViaMatrix",
    "cost_matrix_from_graph",
    "density",
    "detect_negative_cycle",
    "emit_csv",
    "emit_scatter_plot",
    "exhaustive_apsp",
    "fw_classic",
    "fw_squaring",
    "generate",
    "matrices_equal",
    "minplus_accumulate",
    "minplus_broadcast_reference",
    "minplus_identity",
    "minplus_product",
    "normalize_rho",
    "path_from_pred",
    "path_from_via",
    "rkleene",
    "run_benchmark",
    "sssp_all_pairs",
]
