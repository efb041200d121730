"""Command-line front end: gen / solve / bench / verify.

Graphs travel in the plain text format of :mod:`apsp.textio`; solve writes
the distance matrix in the matrix text format.  ``--workers`` takes
precedence over the APSP_WORKERS environment variable; with neither set the
kernel uses the CPU count.
"""

from __future__ import annotations

import argparse
import sys

from .bench import (
    BenchConfig,
    PRESETS,
    all_verified,
    emit_csv,
    emit_scatter_plot,
    run_benchmark,
)
from .core import ApspError, cost_matrix_from_graph, matrices_equal
from .graphgen import GenParams, generate, normalize_rho
from .oracle import sssp_all_pairs
from .paths import path_from_pred, path_from_via
from .solvers import fw_classic, fw_squaring, rkleene
from .textio import format_graph, format_matrix, read_graph, write_graph, write_matrix

# CLI spelling -> internal algorithm tag.
ALGO_NAMES = {
    "fw-classic": "fw_classic",
    "fw-squaring": "fw_squaring",
    "rkleene": "rkleene",
    "oracle": "oracle_sssp",
}


def _cmd_gen(args) -> int:
    params = GenParams(args.nodes, normalize_rho(args.rho), args.alpha, args.seed)
    graph = generate(params)
    if args.out:
        write_graph(graph, args.out)
        print(f"wrote {graph.n} nodes, {graph.n_edges} edges to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(format_graph(graph))
    return 0


def _cmd_solve(args) -> int:
    graph = read_graph(args.infile)
    algorithm = ALGO_NAMES[args.algo]
    h = cost_matrix_from_graph(graph)
    solution = None
    if algorithm == "oracle_sssp":
        distances = sssp_all_pairs(graph)
    elif algorithm == "fw_classic":
        solution = fw_classic(h, workers=args.workers)
        distances = solution.distances
    elif algorithm == "fw_squaring":
        solution = fw_squaring(h, workers=args.workers)
        distances = solution.distances
    else:
        solution = rkleene(h, base_threshold=args.base_threshold, workers=args.workers)
        distances = solution.distances

    if args.out:
        write_matrix(distances, args.out)
    else:
        sys.stdout.write(format_matrix(distances))

    if args.paths is not None:
        src, dst = args.paths
        if solution is None:
            print("error: path reconstruction needs a solver, not the oracle", file=sys.stderr)
            return 2
        if solution.pred is not None:
            path = path_from_pred(solution.pred, distances, src, dst)
        else:
            path = path_from_via(solution.via, distances, graph, src, dst)
        if path is None:
            print("unreachable")
        else:
            print(" ".join(str(v) for v in path.vertices))
            print(path.total_cost)
    return 0


def _cmd_bench(args) -> int:
    base = PRESETS[args.preset]
    if args.algos == "all":
        algorithms = base.algorithms
    else:
        try:
            algorithms = tuple(ALGO_NAMES[name.strip()] for name in args.algos.split(","))
        except KeyError as exc:
            raise ApspError(f"unknown algorithm {exc.args[0]!r}; choices: {list(ALGO_NAMES)}")
    config = BenchConfig(
        count=base.count if args.count is None else args.count,
        min_nodes=base.min_nodes if args.min_nodes is None else args.min_nodes,
        max_nodes=base.max_nodes if args.max_nodes is None else args.max_nodes,
        rho=base.rho if args.rho is None else normalize_rho(args.rho),
        alpha=base.alpha if args.alpha is None else args.alpha,
        seed=base.seed if args.seed is None else args.seed,
        algorithms=algorithms,
        repetitions=base.repetitions if args.reps is None else args.reps,
        base_threshold=args.base_threshold,
        workers=args.workers,
    )

    def progress(index: int, total: int, _records: int) -> None:
        print(f"\r[{index + 1}/{total}] graphs done", end="", file=sys.stderr, flush=True)

    records = run_benchmark(config, progress=progress)
    if config.count:
        print(file=sys.stderr)
    echo = (
        f"count={config.count} nodes=[{config.min_nodes},{config.max_nodes}] "
        f"rho={'per-graph' if config.rho is None else config.rho} alpha={config.alpha} "
        f"seed={config.seed} algos={','.join(config.algorithms)} reps={config.repetitions} "
        f"workers={'auto' if config.workers is None else config.workers}"
    )
    csv_text = emit_csv(records, preamble=echo)
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="\n") as fh:
            fh.write(csv_text)
        print(f"wrote {sum(not r.skipped for r in records)} rows to {args.csv}", file=sys.stderr)
    else:
        sys.stdout.write(csv_text)
    if args.plot:
        svg = emit_scatter_plot(records, metric=args.metric)
        with open(args.plot, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote plot to {args.plot}", file=sys.stderr)
    if not all_verified(records):
        bad = sorted({r.graph_id for r in records if not r.verified})
        print(f"VERIFICATION FAILED on graph ids {bad}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args) -> int:
    graph = read_graph(args.infile)
    h = cost_matrix_from_graph(graph)
    results = {
        "fw_classic": fw_classic(h, workers=args.workers).distances,
        "fw_squaring": fw_squaring(h, workers=args.workers).distances,
        "rkleene": rkleene(h, workers=args.workers).distances,
        "oracle_sssp": sssp_all_pairs(graph),
    }
    reference = results["fw_classic"]
    mismatches = [name for name, d in results.items() if not matrices_equal(reference, d)]
    if mismatches:
        print(f"FAIL ({', '.join(mismatches)} disagree with fw_classic)")
        return 1
    print("PASS")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apsp",
        description="Dense all-pairs shortest paths: solvers, generator, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random graph")
    p.add_argument("--nodes", type=int, required=True, help="vertex count")
    p.add_argument("--rho", type=float, required=True,
                   help="density scale, 0-1 (or percent up to 100)")
    p.add_argument("--alpha", type=int, default=100, help="maximum edge weight (default 100)")
    p.add_argument("--seed", type=int, default=0, help="PRNG seed (default 0)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="solve APSP for a graph file")
    p.add_argument("--algo", choices=sorted(ALGO_NAMES), default="fw-classic")
    p.add_argument("--in", dest="infile", required=True, help="graph file")
    p.add_argument("--out", help="matrix output file (default: stdout)")
    p.add_argument("--paths", nargs=2, type=int, metavar=("SRC", "DST"),
                   help="also print one shortest path: vertex list, then cost")
    p.add_argument("--base-threshold", type=int, default=64,
                   help="rkleene recursion cutoff (default 64)")
    p.add_argument("--workers", type=int, default=None,
                   help="kernel worker count (overrides APSP_WORKERS)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bench", help="run the benchmark harness")
    p.add_argument("--preset", choices=sorted(PRESETS), default="desk",
                   help="population preset supplying defaults (default desk)")
    p.add_argument("--count", type=int, default=None, help="number of graphs")
    p.add_argument("--min-nodes", type=int, default=None)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--rho", type=float, default=None,
                   help="fixed density scale (default: per-graph uniform)")
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--algos", default="all",
                   help="comma list of fw-classic,fw-squaring,rkleene,oracle; or 'all'")
    p.add_argument("--reps", type=int, default=None, help="timing repetitions per solve")
    p.add_argument("--csv", help="CSV output file (default: stdout)")
    p.add_argument("--plot", help="SVG scatter output file")
    p.add_argument("--metric", choices=["wall_time_ms", "relaxation_count"],
                   default="wall_time_ms")
    p.add_argument("--base-threshold", type=int, default=64)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("verify", help="run all solvers plus oracle on a graph, compare")
    p.add_argument("--in", dest="infile", required=True, help="graph file")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ApspError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
