"""Solver contracts: worked examples, cross-solver equality, instrumentation."""

import math

import numpy as np
import pytest
from hypothesis import given, settings

from apsp.core import (
    INF_RAW,
    CostMatrix,
    Graph,
    MalformedGraphError,
    NegativeWeightError,
    ParameterError,
    cost_matrix_from_graph,
    matrices_equal,
    minplus_identity,
)
from apsp.oracle import sssp_all_pairs
from apsp.solvers import (
    SOLVERS,
    detect_negative_cycle,
    fw_classic,
    fw_squaring,
    rkleene,
)

from conftest import graphs
from reference import naive_floyd_warshall, raw_to_nested

THREE_CYCLE = Graph(3, [(0, 1, 1), (1, 2, 2), (2, 0, 4)])
THREE_CYCLE_DISTANCES = [[0, 1, 3], [6, 0, 2], [4, 5, 0]]


def squaring_bound(n: int) -> int:
    return math.ceil(math.log2(max(n - 1, 1))) + 1


def check_via_invariant(solution):
    d = solution.distances.raw
    v = solution.via.raw
    rows, cols = np.nonzero(v >= 0)
    mids = v[rows, cols]
    assert (d[rows, mids] + d[mids, cols] == d[rows, cols]).all()
    # a via vertex is a proper intermediate
    assert (mids != rows).all() and (mids != cols).all()


class TestFwClassic:
    def test_three_cycle(self):
        s = fw_classic(cost_matrix_from_graph(THREE_CYCLE))
        assert s.distances.raw.tolist() == THREE_CYCLE_DISTANCES
        assert s.algorithm == "fw_classic"
        assert s.via is None and s.pred is not None

    def test_edgeless(self):
        s = fw_classic(cost_matrix_from_graph(Graph(3, [])))
        assert matrices_equal(s.distances, minplus_identity(3))
        assert (s.pred.raw == -1).all()

    def test_chain_with_shortcut_pred(self):
        g = Graph(3, [(0, 1, 3), (1, 2, 4), (0, 2, 10)])
        s = fw_classic(cost_matrix_from_graph(g))
        assert s.distances[0, 2].value == 7
        assert s.pred[0, 2] == 1

    def test_pred_initialisation(self):
        g = Graph(3, [(0, 1, 3)])
        s = fw_classic(cost_matrix_from_graph(g))
        assert s.pred[0, 1] == 0
        assert s.pred[0, 2] is None and s.pred[0, 0] is None

    def test_relaxation_count_cubed(self):
        for n in (1, 2, 7, 33):
            s = fw_classic(minplus_identity(n))
            assert s.relaxation_count == n**3
            assert s.iterations == 0


class TestFwSquaring:
    def test_path_graph_iterations(self):
        g = Graph(5, [(i, i + 1, 1) for i in range(4)])
        s = fw_squaring(cost_matrix_from_graph(g))
        assert s.distances[0, 4].value == 4
        assert s.iterations == 3  # hop horizon 1 -> 2 -> 4, then the confirming pass

    def test_already_closed_converges_in_one(self):
        closed = fw_classic(cost_matrix_from_graph(THREE_CYCLE)).distances
        s = fw_squaring(closed)
        assert s.iterations == 1
        assert matrices_equal(s.distances, closed)

    def test_three_cycle_matches_classic(self):
        h = cost_matrix_from_graph(THREE_CYCLE)
        assert s_equal(fw_squaring(h), fw_classic(h))

    def test_relaxations_are_iterations_times_cube(self):
        g = Graph(6, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)])
        s = fw_squaring(cost_matrix_from_graph(g))
        assert s.relaxation_count == s.iterations * 6**3

    def test_via_present_pred_absent(self):
        s = fw_squaring(cost_matrix_from_graph(THREE_CYCLE))
        assert s.pred is None and s.via is not None
        check_via_invariant(s)


def s_equal(a, b):
    return matrices_equal(a.distances, b.distances)


class TestRkleene:
    def test_three_cycle_threshold_one(self):
        s = rkleene(cost_matrix_from_graph(THREE_CYCLE), base_threshold=1)
        assert s.distances.raw.tolist() == THREE_CYCLE_DISTANCES
        check_via_invariant(s)

    def test_base_case_delegates(self):
        g = Graph(7, [(0, 3, 2), (3, 6, 5), (6, 0, 1), (2, 4, 9)])
        h = cost_matrix_from_graph(g)
        assert s_equal(rkleene(h, base_threshold=7), fw_classic(h))
        assert s_equal(rkleene(h, base_threshold=100), fw_classic(h))

    def test_relaxation_count_is_exactly_cubed(self):
        # the recursion does the same candidate work as the classic solver,
        # independent of where the base case cuts off
        rng = np.random.default_rng(3)
        for n, thr in [(1, 1), (2, 1), (9, 2), (24, 16), (33, 1), (40, 64)]:
            raw = rng.integers(1, 50, size=(n, n)).astype(np.int64)
            np.fill_diagonal(raw, 0)
            s = rkleene(CostMatrix(raw), base_threshold=thr)
            assert s.relaxation_count == n**3, (n, thr)

    def test_threshold_validation(self):
        with pytest.raises(ParameterError):
            rkleene(minplus_identity(2), base_threshold=0)

    @given(graphs(max_n=28))
    @settings(deadline=None, max_examples=60)
    def test_bitwise_equal_to_classic_across_thresholds(self, g):
        h = cost_matrix_from_graph(g)
        reference = fw_classic(h)
        for threshold in (1, 2, 16):
            s = rkleene(h, base_threshold=threshold)
            assert matrices_equal(s.distances, reference.distances)
            check_via_invariant(s)


class TestCrossSolverAndOracle:
    @given(graphs(max_n=24))
    @settings(deadline=None, max_examples=60)
    def test_all_solvers_match_oracle(self, g):
        h = cost_matrix_from_graph(g)
        oracle = sssp_all_pairs(g)
        for name, solver in SOLVERS.items():
            assert matrices_equal(solver(h).distances, oracle), name

    @given(graphs(max_n=20))
    @settings(deadline=None, max_examples=40)
    def test_matches_naive_reference(self, g):
        h = cost_matrix_from_graph(g)
        want = naive_floyd_warshall(raw_to_nested(h.raw, INF_RAW))
        got = raw_to_nested(fw_classic(h).distances.raw, INF_RAW)
        assert got == want

    @given(graphs(max_n=20))
    @settings(deadline=None, max_examples=30)
    def test_idempotence(self, g):
        h = cost_matrix_from_graph(g)
        for name, solver in SOLVERS.items():
            closed = solver(h).distances
            assert matrices_equal(solver(closed).distances, closed), name

    @given(graphs(max_n=16))
    @settings(deadline=None, max_examples=30)
    def test_triangle_inequality(self, g):
        d = fw_classic(cost_matrix_from_graph(g)).distances.raw
        n = g.n
        # saturated sums exceed INF_RAW but never undercut a finite cell
        for k in range(n):
            assert (d <= d[:, k, None] + d[None, k, :]).all()

    def test_squaring_iteration_bound(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            n = int(rng.integers(1, 64))
            raw = rng.integers(1, 9, size=(n, n)).astype(np.int64)
            raw[rng.random((n, n)) < 0.7] = INF_RAW
            np.fill_diagonal(raw, 0)
            s = fw_squaring(CostMatrix(raw))
            assert s.iterations <= squaring_bound(n)


class TestDeterminism:
    def test_same_result_any_workers_and_tiles(self):
        rng = np.random.default_rng(23)
        raw = rng.integers(1, 99, size=(45, 45)).astype(np.int64)
        raw[rng.random((45, 45)) < 0.5] = INF_RAW
        np.fill_diagonal(raw, 0)
        h = CostMatrix(raw)
        for name, solver in SOLVERS.items():
            base = solver(h, tile_size=64, workers=1)
            for tile, workers in [(1, 2), (8, 3), (64, 4)]:
                other = solver(h, tile_size=tile, workers=workers)
                assert matrices_equal(base.distances, other.distances), name
                if base.via is not None:
                    assert np.array_equal(base.via.raw, other.via.raw), name
                if base.pred is not None:
                    assert np.array_equal(base.pred.raw, other.pred.raw), name


class TestValidationAndGuards:
    @pytest.mark.parametrize("solver", list(SOLVERS.values()))
    def test_rejects_negative(self, solver):
        with pytest.raises(NegativeWeightError):
            solver(CostMatrix.from_rows([[0, -2], [1, 0]]))

    @pytest.mark.parametrize("solver", list(SOLVERS.values()))
    def test_rejects_nonzero_diagonal(self, solver):
        with pytest.raises(MalformedGraphError):
            solver(CostMatrix.from_rows([[0, 1], [1, 3]]))

    @pytest.mark.parametrize("solver", list(SOLVERS.values()))
    def test_input_not_mutated(self, solver):
        h = cost_matrix_from_graph(THREE_CYCLE)
        before = h.raw.copy()
        solver(h)
        assert np.array_equal(h.raw, before)

    def test_detect_negative_cycle(self):
        assert not detect_negative_cycle(minplus_identity(2))
        assert not detect_negative_cycle(CostMatrix.from_rows([[0, 1], [1, 0]]))
        assert detect_negative_cycle(CostMatrix.from_rows([[-1, 1], [1, 0]]))
