"""Benchmark harness: generate a graph population, run solvers, record rows.

Reproduces the dense-APSP timing experiment at desk scale: draw a seeded
population of random graphs, run every enabled algorithm on each, verify the
distance matrices against each other, and emit CSV rows plus a scatter plot
of a chosen metric against edge count (log y-axis), sorted ascending by edge
count.

Timing is the minimum over R repetitions of the solve call only (generation
and verification excluded), on the monotonic clock.  All non-timing fields
are a pure function of the config, so two runs of the same config differ
only in wall_time_ms.

The optional ``oracle_sssp`` series is the baseline per-source sweep; it is
not a matrix solver, so its iterations and relaxation_count are recorded
as 0.
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import CapacityError, Graph, ParameterError, cost_matrix_from_graph, matrices_equal
from .graphgen import GenParams, density, generate
from .oracle import sssp_all_pairs
from .solvers import SOLVERS, DEFAULT_BASE_THRESHOLD

CSV_HEADER = "graph_id,n_nodes,n_edges,density,algorithm,wall_time_ms,iterations,relaxation_count,seed"

DEFAULT_ALGORITHMS = ("fw_classic", "fw_squaring", "rkleene")
KNOWN_ALGORITHMS = DEFAULT_ALGORITHMS + ("oracle_sssp",)

# Fixed per-algorithm plot styling so series look the same across runs.
ALGO_STYLE = {
    "fw_classic": ("tab:blue", "o"),
    "fw_squaring": ("tab:orange", "s"),
    "rkleene": ("tab:green", "^"),
    "oracle_sssp": ("tab:red", "x"),
}


@dataclass(frozen=True)
class BenchConfig:
    """Graph population parameters plus solver knobs for one benchmark run."""

    count: int = 100
    min_nodes: int = 4
    max_nodes: int = 512
    rho: float | None = None  # None: per-graph rho ~ Uniform[0,1], as drawn
    alpha: int = 100
    seed: int = 0
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS
    repetitions: int = 3
    base_threshold: int = DEFAULT_BASE_THRESHOLD
    tile_size: int = 64
    workers: int | None = None

    def __post_init__(self):
        if self.count < 0:
            raise ParameterError(f"count must be >= 0, got {self.count}")
        if not 1 <= self.min_nodes <= self.max_nodes:
            raise ParameterError(f"bad node range [{self.min_nodes},{self.max_nodes}]")
        if self.rho is not None and not 0.0 <= self.rho <= 1.0:
            raise ParameterError(f"rho must lie in [0,1], got {self.rho}")
        if self.alpha < 1:
            raise ParameterError(f"alpha must be >= 1, got {self.alpha}")
        if self.repetitions < 1:
            raise ParameterError(f"repetitions must be >= 1, got {self.repetitions}")
        unknown = [a for a in self.algorithms if a not in KNOWN_ALGORITHMS]
        if unknown:
            raise ParameterError(f"unknown algorithms: {unknown}; known: {list(KNOWN_ALGORITHMS)}")
        if not self.algorithms:
            raise ParameterError("at least one algorithm is required")


# Desk scale: completes in minutes on one machine.
DESK_PRESET = BenchConfig()
# The original experiment's population shape (1000 graphs, up to 1000 nodes).
PAPER_PRESET = BenchConfig(count=1000, min_nodes=4, max_nodes=1000)

PRESETS = {"desk": DESK_PRESET, "paper": PAPER_PRESET}


@dataclass(frozen=True)
class BenchRecord:
    """One (graph, algorithm) measurement.

    ``verified`` is False when this algorithm's distance matrix disagreed
    with the run's reference matrix; ``skipped`` marks a capacity bail-out
    (such records carry no timing and are excluded from CSV output).
    """

    graph_id: int
    n_nodes: int
    n_edges: int
    density: float
    algorithm: str
    wall_time_ms: float
    iterations: int
    relaxation_count: int
    seed: int
    verified: bool = True
    skipped: bool = False


def _draw_population(config: BenchConfig) -> list[tuple[int, int, float, int]]:
    # One Philox stream keyed by the master seed fixes (v, rho, seed) per
    # graph; graph bits themselves come from the per-graph seed.
    rng = np.random.Generator(np.random.Philox(config.seed))
    population = []
    for graph_id in range(config.count):
        v = int(rng.integers(config.min_nodes, config.max_nodes, endpoint=True))
        rho = float(rng.random()) if config.rho is None else config.rho
        graph_seed = int(rng.integers(0, 2**63))
        population.append((graph_id, v, rho, graph_seed))
    return population


def _solve_once(algorithm: str, graph: Graph, h, config: BenchConfig):
    if algorithm == "oracle_sssp":
        return sssp_all_pairs(graph)
    solver = SOLVERS[algorithm]
    kwargs = {"tile_size": config.tile_size, "workers": config.workers}
    if algorithm == "rkleene":
        kwargs["base_threshold"] = config.base_threshold
    return solver(h, **kwargs)


def run_benchmark(
    config: BenchConfig,
    progress: Callable[[int, int, int], None] | None = None,
) -> list[BenchRecord]:
    """Run the population; returns records sorted ascending by n_edges.

    Each graph is generated once, each enabled algorithm timed as the
    minimum of ``config.repetitions`` calls, and all distance matrices are
    compared against the first algorithm's.  ``progress``, if given, is
    called after each graph with (graph_index, total, records_so_far).
    """
    records: list[BenchRecord] = []
    population = _draw_population(config)
    for graph_id, v, rho, graph_seed in population:
        graph = generate(GenParams(v, rho, config.alpha, graph_seed))
        h = cost_matrix_from_graph(graph)
        dens = density(graph)
        reference = None
        for algorithm in config.algorithms:
            try:
                best_ms = float("inf")
                result = None
                for _ in range(config.repetitions):
                    t0 = time.perf_counter()
                    result = _solve_once(algorithm, graph, h, config)
                    elapsed = (time.perf_counter() - t0) * 1000.0
                    best_ms = min(best_ms, elapsed)
            except CapacityError:
                records.append(
                    BenchRecord(graph_id, v, graph.n_edges, dens, algorithm,
                                0.0, 0, 0, graph_seed, verified=True, skipped=True)
                )
                continue
            distances = result if algorithm == "oracle_sssp" else result.distances
            if reference is None:
                reference = distances
                verified = True
            else:
                verified = matrices_equal(reference, distances)
            iterations = 0 if algorithm == "oracle_sssp" else result.iterations
            relaxations = 0 if algorithm == "oracle_sssp" else result.relaxation_count
            records.append(
                BenchRecord(graph_id, v, graph.n_edges, dens, algorithm,
                            best_ms, iterations, relaxations, graph_seed, verified=verified)
            )
        if progress is not None:
            progress(graph_id, len(population), len(records))
    records.sort(key=lambda r: (r.n_edges, r.graph_id))
    return records


def all_verified(records: Sequence[BenchRecord]) -> bool:
    return all(r.verified for r in records)


def emit_csv(records: Sequence[BenchRecord], preamble: str | None = None) -> str:
    """Render records as CSV text (LF endings, fixed header and field order).

    ``preamble`` lines, if given, are emitted first, each prefixed with
    ``# `` — the config echo.  Skipped records carry no measurement and are
    omitted.
    """
    lines = []
    if preamble:
        lines.extend(f"# {line}" for line in preamble.splitlines())
    lines.append(CSV_HEADER)
    for r in records:
        if r.skipped:
            continue
        lines.append(
            f"{r.graph_id},{r.n_nodes},{r.n_edges},{r.density:.6f},{r.algorithm},"
            f"{r.wall_time_ms:.3f},{r.iterations},{r.relaxation_count},{r.seed}"
        )
    return "\n".join(lines) + "\n"


def emit_scatter_plot(records: Sequence[BenchRecord], metric: str = "wall_time_ms") -> str:
    """Render an SVG scatter of metric vs edge count, one series per algorithm.

    metric is ``wall_time_ms`` or ``relaxation_count``; y is log-scaled.
    Raises on empty input.
    """
    if metric not in ("wall_time_ms", "relaxation_count"):
        raise ParameterError(f"metric must be wall_time_ms or relaxation_count, got {metric!r}")
    rows = [r for r in records if not r.skipped]
    if not rows:
        raise ParameterError("no records to plot")
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    present = sorted({r.algorithm for r in rows},
                     key=lambda a: (KNOWN_ALGORITHMS.index(a) if a in KNOWN_ALGORITHMS else 99, a))
    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        for algorithm in present:
            xs = [r.n_edges for r in rows if r.algorithm == algorithm]
            ys = [getattr(r, metric) for r in rows if r.algorithm == algorithm]
            color, marker = ALGO_STYLE.get(algorithm, ("tab:gray", "."))
            ax.scatter(xs, ys, s=14, c=color, marker=marker, label=algorithm)
        ax.set_xlabel("edges")
        ax.set_ylabel(metric)
        ax.set_yscale("log")
        ax.legend()
        ax.set_title(f"{metric} vs graph size")
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg")
    finally:
        plt.close(fig)
    return buffer.getvalue()
