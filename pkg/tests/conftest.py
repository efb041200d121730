"""Shared fixtures: the 300-instance random suite and hypothesis strategies."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest
from hypothesis import strategies as st

from apsp.core import INF_RAW, CostMatrix, Graph, cost_matrix_from_graph
from apsp.graphgen import GenParams, generate
from apsp.oracle import sssp_all_pairs
from apsp.solvers import ApspSolution, fw_classic, fw_squaring, rkleene

SUITE_RHOS = (0.05, 0.25, 0.5, 1.0)
SUITE_SIZE = 300
SUITE_MASTER_SEED = 20260825


def _complete_graph(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [
        (i, j, int(rng.integers(1, 101)))
        for i in range(n)
        for j in range(n)
        if i != j
    ]
    return Graph(n, edges)


def build_suite_graphs() -> list[Graph]:
    """292 seeded random graphs plus edgeless and complete extremes."""
    rng = np.random.default_rng(SUITE_MASTER_SEED)
    graphs = [
        Graph(1, []),
        Graph(2, []),
        Graph(17, []),
        Graph(64, []),
        _complete_graph(2, 1),
        _complete_graph(3, 2),
        _complete_graph(17, 3),
        _complete_graph(50, 4),
    ]
    for i in range(SUITE_SIZE - len(graphs)):
        n = int(rng.integers(1, 129))
        rho = SUITE_RHOS[i % len(SUITE_RHOS)]
        seed = int(rng.integers(0, 2**63))
        graphs.append(generate(GenParams(n, rho, 100, seed)))
    return graphs


@dataclass
class SuiteCase:
    graph: Graph
    h: CostMatrix
    oracle: CostMatrix
    solutions: dict[str, ApspSolution]


@pytest.fixture(scope="session")
def suite() -> list[SuiteCase]:
    """Every suite graph, solved by every solver configuration plus oracle."""
    cases = []
    for graph in build_suite_graphs():
        h = cost_matrix_from_graph(graph)
        solutions = {
            "fw_classic": fw_classic(h),
            "fw_squaring": fw_squaring(h),
            "rkleene_t1": rkleene(h, base_threshold=1),
            "rkleene_t16": rkleene(h, base_threshold=16),
            "rkleene_t64": rkleene(h, base_threshold=64),
        }
        cases.append(SuiteCase(graph=graph, h=h, oracle=sssp_all_pairs(graph), solutions=solutions))
    return cases


@st.composite
def graphs(draw, max_n: int = 24, max_weight: int = 50):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    edges = [(u, v, draw(st.integers(min_value=1, max_value=max_weight))) for u, v in chosen]
    return Graph(n, edges)


@st.composite
def square_cost_matrices(draw, max_n: int = 16, max_cost: int = 60, zero_diagonal: bool = True):
    """Random square matrix with a mix of finite cells and Infinity."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    cells = np.full((n, n), INF_RAW, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i == j and zero_diagonal:
                cells[i, j] = 0
            elif draw(st.booleans()):
                cells[i, j] = draw(st.integers(min_value=0, max_value=max_cost))
    return CostMatrix(cells)
