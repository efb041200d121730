"""Benchmark harness: record production, CSV layout, plot determinism."""

import dataclasses

import pytest

from apsp.bench import (
    ALGO_STYLE,
    CSV_HEADER,
    BenchConfig,
    BenchRecord,
    DESK_PRESET,
    PAPER_PRESET,
    all_verified,
    emit_csv,
    emit_scatter_plot,
    run_benchmark,
)
from apsp.core import ParameterError

NINE_RECORD_CONFIG = BenchConfig(
    count=3, min_nodes=4, max_nodes=8, rho=0.5, alpha=100, seed=1, repetitions=3
)


@pytest.fixture(scope="module")
def nine_records():
    return run_benchmark(NINE_RECORD_CONFIG)


class TestRunBenchmark:
    def test_nine_records_all_verified(self, nine_records):
        assert len(nine_records) == 9
        assert all_verified(nine_records)
        assert {r.algorithm for r in nine_records} == {"fw_classic", "fw_squaring", "rkleene"}

    def test_empty_population(self):
        assert run_benchmark(dataclasses.replace(NINE_RECORD_CONFIG, count=0)) == []

    def test_sorted_ascending_by_edges(self, nine_records):
        edges = [r.n_edges for r in nine_records]
        assert edges == sorted(edges)

    def test_deterministic_apart_from_timing(self, nine_records):
        again = run_benchmark(NINE_RECORD_CONFIG)

        def strip(r):
            return dataclasses.replace(r, wall_time_ms=0.0)

        assert [strip(r) for r in again] == [strip(r) for r in nine_records]

    def test_fields(self, nine_records):
        for r in nine_records:
            assert r.wall_time_ms > 0
            assert 0.0 <= r.density <= 1.0
            assert 4 <= r.n_nodes <= 8
            assert r.relaxation_count >= r.n_nodes**3
            if r.algorithm == "fw_squaring":
                assert r.iterations >= 1
            else:
                assert r.iterations == 0

    def test_oracle_series_opt_in(self):
        config = dataclasses.replace(
            NINE_RECORD_CONFIG,
            count=2,
            algorithms=("fw_classic", "oracle_sssp"),
            repetitions=1,
        )
        records = run_benchmark(config)
        assert len(records) == 4
        assert all_verified(records)
        oracle_rows = [r for r in records if r.algorithm == "oracle_sssp"]
        assert all(r.iterations == 0 and r.relaxation_count == 0 for r in oracle_rows)

    def test_progress_callback(self):
        seen = []
        run_benchmark(
            dataclasses.replace(NINE_RECORD_CONFIG, count=2, repetitions=1),
            progress=lambda i, total, n: seen.append((i, total, n)),
        )
        assert [s[:2] for s in seen] == [(0, 2), (1, 2)]


class TestConfigValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"count": -1},
            {"min_nodes": 0},
            {"min_nodes": 9, "max_nodes": 8},
            {"rho": 1.5},
            {"alpha": 0},
            {"repetitions": 0},
            {"algorithms": ("fw_classic", "made_up")},
            {"algorithms": ()},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ParameterError):
            dataclasses.replace(BenchConfig(), **kwargs)

    def test_presets(self):
        assert DESK_PRESET.count == 100 and DESK_PRESET.max_nodes == 512
        assert PAPER_PRESET.count == 1000 and PAPER_PRESET.max_nodes == 1000


class TestEmitCsv:
    def test_header_exact(self):
        assert (
            CSV_HEADER
            == "graph_id,n_nodes,n_edges,density,algorithm,wall_time_ms,iterations,relaxation_count,seed"
        )
        assert emit_csv([]) == CSV_HEADER + "\n"

    def test_row_formatting(self):
        record = BenchRecord(3, 10, 45, 0.5, "fw_classic", 12.3456, 0, 1000, 99)
        text = emit_csv([record])
        lines = text.split("\n")
        assert lines[0] == CSV_HEADER
        assert lines[1] == "3,10,45,0.500000,fw_classic,12.346,0,1000,99"
        assert text.endswith("\n") and "\r" not in text

    def test_preamble_comment(self):
        text = emit_csv([], preamble="workers=2\nseed=1")
        assert text.splitlines()[0] == "# workers=2"
        assert text.splitlines()[1] == "# seed=1"
        assert text.splitlines()[2] == CSV_HEADER

    def test_skipped_rows_omitted(self):
        kept = BenchRecord(0, 4, 3, 0.25, "fw_classic", 1.0, 0, 64, 1)
        skipped = BenchRecord(0, 4, 3, 0.25, "rkleene", 0.0, 0, 0, 1, skipped=True)
        text = emit_csv([kept, skipped])
        assert len(text.splitlines()) == 2

    def test_real_records_parse_back(self, nine_records):
        lines = emit_csv(nine_records).splitlines()
        assert len(lines) == 10
        for line, record in zip(lines[1:], nine_records):
            fields = line.split(",")
            assert int(fields[0]) == record.graph_id
            assert fields[4] == record.algorithm
            assert int(fields[8]) == record.seed


class TestScatterPlot:
    def test_svg_with_one_series_per_algorithm(self, nine_records):
        svg = emit_scatter_plot(nine_records, metric="wall_time_ms")
        assert svg.lstrip().startswith("<?xml")
        assert "<svg" in svg
        for algorithm in ("fw_classic", "fw_squaring", "rkleene"):
            assert algorithm in svg  # legend labels

    def test_relaxation_metric(self, nine_records):
        assert "<svg" in emit_scatter_plot(nine_records, metric="relaxation_count")

    def test_empty_or_bad_metric(self, nine_records):
        with pytest.raises(ParameterError):
            emit_scatter_plot([], metric="wall_time_ms")
        with pytest.raises(ParameterError):
            emit_scatter_plot(nine_records, metric="nanoseconds")

    def test_stable_styles(self):
        assert ALGO_STYLE["fw_classic"] != ALGO_STYLE["rkleene"]
        assert set(ALGO_STYLE) == {"fw_classic", "fw_squaring", "rkleene", "oracle_sssp"}
