"""
Tests for campaign orchestration.

The n = 4 and n = 8 campaigns use 1000 trials with a fixed master seed;
their bands are wide enough to hold for any reasonable seed.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

import pytest

from lv_queens.data.models import CampaignResult, ExperimentConfig, Solution, TrialStatus
from lv_queens.harness.campaign import (
    _chunks,
    compute_speedup,
    run_campaign,
    run_trial,
    run_trials,
    summarize,
)
from lv_queens.solvers.backtracking import solve_backtracking
from lv_queens.solvers.board import verify_solution

MASTER_SEED = 20240611


def _campaign(n_values: list[int], trials: int = 1000, **overrides) -> CampaignResult:
    cfg = ExperimentConfig(n_values=n_values, trials_per_n=trials, master_seed=MASTER_SEED, **overrides)
    return run_campaign(cfg, emit=False)


@pytest.fixture(scope="module")
def campaign_4_and_8() -> CampaignResult:
    return _campaign([4, 8])


class TestComputeSpeedup:
    @pytest.mark.parametrize(
        ("back", "mean", "expected"),
        [(26, 16.585, 1.568), (876, 103.268, 8.483), (10, 10.0, 1.0)],
    )
    def test_table_values(self, back, mean, expected):
        assert round(compute_speedup(back, mean), 3) == expected

    @pytest.mark.parametrize("mean", [0.0, -1.0])
    def test_non_positive_mean(self, mean):
        with pytest.raises(ValueError):
            compute_speedup(10, mean)


class TestRunTrial:
    def test_ok_record(self):
        record = run_trial(8, MASTER_SEED, 3, budget=None, record_timings=False)
        assert record.ok
        assert record.attempts >= 8
        assert record.duration_ns == 0
        solution = Solution.from_columns([int(c) for c in record.solution.split()])
        assert verify_solution(solution)

    def test_timings_recorded_on_request(self):
        assert run_trial(8, MASTER_SEED, 3, budget=None, record_timings=True).duration_ns > 0

    def test_budget_exhausted_record(self):
        record = run_trial(8, MASTER_SEED, 0, budget=1, record_timings=False)
        assert record.status is TrialStatus.BUDGET_EXHAUSTED
        assert record.attempts == 1
        assert record.solution == ""

    def test_depends_only_on_seed_triple(self):
        a = run_trial(6, 99, 17, budget=None, record_timings=False)
        b = run_trial(6, 99, 17, budget=None, record_timings=False)
        assert a == b


class TestRunTrials:
    def test_chunks_cover_range_in_order(self):
        chunks = _chunks(1000, 3)
        assert chunks[0][0] == 0
        assert chunks[-1][1] == 1000
        assert all(a[1] == b[0] for a, b in zip(chunks, chunks[1:], strict=False))

    def test_chunks_small_total(self):
        assert _chunks(2, 4) == [(0, 1), (1, 2)]

    def test_pool_matches_serial(self):
        cfg = ExperimentConfig(n_values=[7], trials_per_n=120, master_seed=5, parallelism=2)
        serial = run_trials(7, cfg)
        with ProcessPoolExecutor(max_workers=2) as pool:
            pooled = run_trials(7, cfg, pool)
        assert pooled == serial
        assert [r.trial for r in pooled] == list(range(120))


class TestSummarize:
    def test_speedup_column(self, campaign_4_and_8):
        for row in campaign_4_and_8.rows:
            assert row.back_attempts is not None
            assert row.speedup == pytest.approx(row.back_attempts / row.mean)

    def test_excluded_trials_warned(self, caplog):
        cfg = ExperimentConfig(n_values=[8], trials_per_n=60, master_seed=1, attempts_budget=30)
        records = run_trials(8, cfg)
        excluded = sum(1 for r in records if not r.ok)
        assert excluded > 0
        with caplog.at_level(logging.WARNING, logger="lv_queens"):
            row = summarize(8, records, None)
        assert f"{excluded} trial(s) exhausted" in caplog.text
        assert row is not None
        assert row.back_attempts is None
        assert row.speedup is None

    def test_single_queen_has_no_row(self, caplog):
        cfg = ExperimentConfig(n_values=[1], trials_per_n=20, master_seed=1)
        with caplog.at_level(logging.WARNING, logger="lv_queens"):
            assert summarize(1, run_trials(1, cfg), solve_backtracking(1)) is None
        assert "no summary row" in caplog.text

    def test_small_sample_has_no_distribution(self):
        cfg = ExperimentConfig(n_values=[6], trials_per_n=10, master_seed=3)
        row = summarize(6, run_trials(6, cfg), None)
        assert row is not None
        assert row.distribution is None


class TestRunCampaign:
    def test_n4_row(self, campaign_4_and_8):
        row = next(r for r in campaign_4_and_8.rows if r.n == 4)
        assert row.mode == 4
        assert row.lower == pytest.approx(4.0)
        assert row.mean == pytest.approx(16.585, rel=0.15)
        assert row.back_attempts == 26

    def test_n8_row(self, campaign_4_and_8):
        row = next(r for r in campaign_4_and_8.rows if r.n == 8)
        assert 88 <= row.mean <= 119
        assert row.median == pytest.approx(74, rel=0.15)
        assert row.mode == 8
        assert 1.5 <= row.skew <= 2.6
        assert 3.5 <= row.kurtosis <= 9.5
        assert row.back_attempts == 876
        assert row.speedup == pytest.approx(8.483, rel=0.15)
        assert row.distribution is not None

    def test_right_skew(self, campaign_4_and_8):
        row = next(r for r in campaign_4_and_8.rows if r.n == 8)
        assert row.mean > row.median > row.mode

    def test_conservation(self, campaign_4_and_8):
        for n in (4, 8):
            ok = sum(1 for r in campaign_4_and_8.raw[n] if r.ok)
            assert ok == 1000
            assert campaign_4_and_8.histograms[n].total == ok
            assert campaign_4_and_8.excluded(n) == 0

    def test_raw_rows_verify(self, campaign_4_and_8):
        for record in campaign_4_and_8.raw[8]:
            assert record.attempts >= 8
            cols = [int(c) for c in record.solution.split()]
            assert verify_solution(Solution.from_columns(cols))

    def test_deterministic(self):
        assert _campaign([5, 6], trials=100).raw == _campaign([5, 6], trials=100).raw

    def test_parallelism_does_not_change_results(self):
        serial = _campaign([6, 7], trials=150)
        pooled = _campaign([6, 7], trials=150, parallelism=2)
        assert serial.raw == pooled.raw
        assert serial.rows == pooled.rows

    def test_backtracking_skipped_above_limit(self):
        result = _campaign([4, 5], trials=40, skip_backtracking_above=4)
        assert set(result.backtracking) == {4}
        row5 = next(r for r in result.rows if r.n == 5)
        assert row5.back_attempts is None

    def test_single_queen_in_range(self):
        result = _campaign([1, 4], trials=50)
        assert [r.n for r in result.rows] == [4]
        assert len(result.raw[1]) == 50

    def test_budget_flags_and_excludes(self):
        result = _campaign([8], trials=100, attempts_budget=40)
        flagged = result.excluded(8)
        assert 0 < flagged < 100
        assert result.histograms[8].total == 100 - flagged

    @pytest.mark.slow
    def test_n22_right_skew(self):
        result = _campaign([22], trials=1000, skip_backtracking_above=21)
        row = result.rows[0]
        assert row.mean > row.median > row.mode
