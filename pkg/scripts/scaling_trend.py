#!/usr/bin/env python3
"""Time the three solvers on half-dense graphs of doubling size.

Prints a fixed-width table of median wall times so the crossover between
the single-product algorithms and repeated squaring is visible directly.
"""

import argparse
import statistics
import time

from apsp.core import cost_matrix_from_graph
from apsp.graphgen import GenParams, generate
from apsp.solvers import SOLVERS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[128, 256, 512, 1024])
    ap.add_argument("--rho", type=float, default=0.5)
    ap.add_argument("--alpha", type=int, default=100)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    names = list(SOLVERS)
    # warm the jit cache so the first timed cell is not paying compile cost
    warm = cost_matrix_from_graph(generate(GenParams(32, args.rho, args.alpha, 0)))
    for name in names:
        SOLVERS[name](warm)

    header = f"{'n':>6} | " + " | ".join(f"{name:>14}" for name in names)
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        h = cost_matrix_from_graph(generate(GenParams(n, args.rho, args.alpha, args.seed + n)))
        cells = []
        for name in names:
            times = []
            for _ in range(args.reps):
                t0 = time.perf_counter()
                SOLVERS[name](h)
                times.append((time.perf_counter() - t0) * 1000.0)
            cells.append(f"{statistics.median(times):11.1f} ms")
        print(f"{n:>6} | " + " | ".join(f"{c:>14}" for c in cells))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
