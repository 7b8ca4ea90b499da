import csv
import io
import os

import numpy as np
import pytest

from degreeldp import (
    CSV_COLUMNS,
    DATA_DIR_ENV,
    ExperimentConfig,
    Strategy,
    degree_sequence,
    emit_csv,
    load_dataset,
    mae,
    mae_dist,
    mse,
    run_pipeline,
)
from degreeldp.harness import find_dataset
from conftest import FIG_EDGE_LIST


@pytest.fixture
def fig_file(tmp_path):
    path = tmp_path / "fig.txt"
    path.write_text(FIG_EDGE_LIST)
    return str(path)


class TestMetrics:
    def test_mae_mse_spot_values(self):
        assert mae([2, 3, 2, 1], [1, 1, 1, 1]) == pytest.approx(1.0)
        assert mse([2, 3, 2, 1], [1, 1, 1, 1]) == pytest.approx(1.5)

    def test_perfect_estimate_is_zero(self):
        assert mae([1, 2, 3], [1, 2, 3]) == 0.0
        assert mse([1, 2, 3], [1, 2, 3]) == 0.0

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            mae([1, 2], [1])
        with pytest.raises(ValueError):
            mse([1, 2], [1])

    def test_mae_dist_is_scaled_l1(self):
        p = [0.5, 0.5, 0.0]
        q = [0.25, 0.5, 0.25]
        assert mae_dist(p, q) == pytest.approx(0.5 / 3)


class TestConfigValidation:
    def test_trials_positive(self):
        with pytest.raises(ValueError):
            ExperimentConfig(dataset="x", trials=0)

    def test_theta_tokens(self):
        with pytest.raises(ValueError):
            ExperimentConfig(dataset="x", theta="auto-bogus")
        with pytest.raises(ValueError):
            ExperimentConfig(dataset="x", theta=0)
        ExperimentConfig(dataset="x", theta="auto-sum")
        ExperimentConfig(dataset="x", theta=5)


class TestDatasetResolution:
    def test_synthetic_token(self):
        g, label = load_dataset("synthetic:50:3:9")
        assert g.n == 50
        assert label == "synthetic-50-3-9"

    def test_synthetic_token_defaults(self):
        g, label = load_dataset("synthetic:30")
        assert g.n == 30
        assert label == "synthetic-30-4-0"

    def test_bad_synthetic_token(self):
        with pytest.raises(ValueError):
            load_dataset("synthetic:")

    def test_env_dir_fallback(self, tmp_path, monkeypatch):
        (tmp_path / "toy.txt").write_text("1 2\n")
        monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
        assert find_dataset("toy.txt") == str(tmp_path / "toy.txt")
        g, label = load_dataset("toy.txt")
        assert g.m == 1 and label == "toy"

    def test_missing_dataset_mentions_env_var(self, monkeypatch):
        monkeypatch.delenv(DATA_DIR_ENV, raising=False)
        with pytest.raises(FileNotFoundError, match=DATA_DIR_ENV):
            find_dataset("definitely-not-here.txt")


class TestRunPipeline:
    def test_row_count_and_schema(self, fig_file):
        cfg = ExperimentConfig(dataset=fig_file, theta=1, trials=3, seed=5,
                               private=False, projection_only=True)
        rows, reports = run_pipeline(cfg)
        assert len(rows) == 3
        assert reports == []
        for row in rows:
            assert row.strategy == "lpea-low"
            assert row.theta == 1

    def test_projection_only_metrics_match_worked_example(self, fig_file):
        cfg = ExperimentConfig(dataset=fig_file, theta=1, trials=1, seed=5,
                               private=False, projection_only=True)
        rows, _ = run_pipeline(cfg)
        ## low-first addition at bound 1 keeps B-D and A-C: degrees all 1
        assert rows[0].mae_seq == pytest.approx(1.0)
        assert rows[0].mse_seq == pytest.approx(1.5)
        assert rows[0].edge_ratio == pytest.approx(0.5)

    def test_private_pipeline_emits_reports(self):
        cfg = ExperimentConfig(dataset="synthetic:40:3:1", theta=3, trials=2, seed=0)
        rows, reports = run_pipeline(cfg)
        assert len(rows) == len(reports) == 2
        assert all(len(r.noisy_degrees) == 40 for r in reports)

    def test_determinism_modulo_runtime(self):
        cfg = ExperimentConfig(dataset="synthetic:60:3:2", theta="auto-deviation", trials=3, seed=9)
        rows1, _ = run_pipeline(cfg)
        rows2, _ = run_pipeline(cfg)
        for a, b in zip(rows1, rows2):
            for col in CSV_COLUMNS:
                if col != "runtime_ms":
                    assert getattr(a, col) == getattr(b, col)

    def test_distinct_trial_seeds(self):
        cfg = ExperimentConfig(dataset="synthetic:40:3:1", theta=2, trials=4, seed=1)
        rows, _ = run_pipeline(cfg)
        assert len({r.seed for r in rows}) == 4

    def test_auto_theta_matches_direct_resolution(self):
        from degreeldp import ThetaSearchConfig, quantile_oracle

        g, _ = load_dataset("synthetic:80:3:4")
        degs = degree_sequence(g)
        cfg = ExperimentConfig(dataset="synthetic:80:3:4", theta="auto-deviation",
                               trials=1, seed=0, epsilon=2.0)
        rows, _ = run_pipeline(cfg)
        assert rows[0].theta == quantile_oracle(degs, 2.0, max(degs))

    def test_explicit_graph_skips_loading(self, fig_file):
        g, _ = load_dataset(fig_file)
        cfg = ExperimentConfig(dataset="in-memory", theta=1, trials=1,
                               private=False, projection_only=True)
        rows, _ = run_pipeline(cfg, graph=g)
        assert rows[0].dataset == "in-memory"

    def test_strategy_flows_into_rows(self, fig_file):
        cfg = ExperimentConfig(dataset=fig_file, theta=2, trials=1, strategy=Strategy.EDGE_REMOVE,
                               private=False, projection_only=True)
        rows, _ = run_pipeline(cfg)
        assert rows[0].strategy == "edge-remove"


class TestEmitCsv:
    def _rows(self):
        cfg = ExperimentConfig(dataset="synthetic:40:3:1", theta=2, trials=2, seed=3)
        return run_pipeline(cfg)[0]

    def test_header_exact(self):
        buf = io.StringIO()
        emit_csv(self._rows(), buf)
        header = buf.getvalue().splitlines()[0]
        assert header == "dataset,strategy,epsilon,alpha,theta,trial,seed,mae_seq,mse_seq,mae_dist,edge_ratio,runtime_ms"

    def test_floats_round_trip_exactly(self):
        rows = self._rows()
        buf = io.StringIO()
        emit_csv(rows, buf)
        parsed = list(csv.DictReader(io.StringIO(buf.getvalue())))
        assert len(parsed) == len(rows)
        for row, rec in zip(rows, parsed):
            assert float(rec["mae_seq"]) == row.mae_seq
            assert float(rec["mse_seq"]) == row.mse_seq
            assert float(rec["mae_dist"]) == row.mae_dist
            assert float(rec["edge_ratio"]) == row.edge_ratio
            assert int(rec["seed"]) == row.seed

    def test_path_sink(self, tmp_path):
        out = tmp_path / "rows.csv"
        emit_csv(self._rows(), str(out))
        assert out.read_text().startswith("dataset,")
        assert len(out.read_text().splitlines()) == 3
