"""
Campaign orchestration.

For each board size: run ``trials_per_n`` seeded Las Vegas trials, run the
backtracking baseline once, and fold the successful trials into one
summary row.  Trials are independent tasks; with ``parallelism > 1`` they
are spread over a process pool in contiguous index chunks and reassembled
in trial-index order, so results never depend on scheduling.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

from lv_queens.analysis.fitting import FitError, best_fit
from lv_queens.analysis.stats import DegenerateSampleError, describe
from lv_queens.data.models import (
    BacktrackOutcome,
    CampaignResult,
    ExperimentConfig,
    SummaryRow,
    TrialRecord,
    TrialStatus,
)
from lv_queens.export.files import emit_outputs, ensure_writable, success_histogram
from lv_queens.harness.seeding import trial_seed
from lv_queens.solvers.backtracking import solve_backtracking
from lv_queens.solvers.board import verify_solution
from lv_queens.solvers.las_vegas import BudgetExhaustedError, InvariantViolationError, las_vegas

logger = logging.getLogger(__name__)

# Chunks per worker; more chunks even out the heavy-tailed trial lengths.
_CHUNKS_PER_WORKER = 8


def compute_speedup(back_attempts: int, lv_mean: float) -> float:
    """Backtracking candidate tests per mean Las Vegas attempt."""
    if lv_mean <= 0:
        raise ValueError(f"mean attempts must be positive, got {lv_mean}")
    return back_attempts / lv_mean


# ---------------------------------------------------------------------------
# Trials
# ---------------------------------------------------------------------------


def run_trial(n: int, master_seed: int, trial: int, budget: int | None, record_timings: bool) -> TrialRecord:
    """Run and verify one trial; a spent budget becomes a flagged record."""
    seed = trial_seed(master_seed, n, trial)
    try:
        outcome = las_vegas(n, seed, budget=budget)
    except BudgetExhaustedError as exc:
        logger.debug("n=%d trial %d exhausted its budget", n, trial)
        return TrialRecord(
            n=n,
            trial=trial,
            seed=seed,
            attempts=exc.attempts,
            restarts=exc.restarts,
            status=TrialStatus.BUDGET_EXHAUSTED,
        )

    if not verify_solution(outcome.solution):
        raise InvariantViolationError(f"n={n} trial {trial} (seed {seed}) returned an attacking placement")
    return TrialRecord(
        n=n,
        trial=trial,
        seed=seed,
        attempts=outcome.attempts,
        restarts=outcome.restarts,
        duration_ns=outcome.duration_ns if record_timings else 0,
        solution=outcome.solution.signature(),
    )


def _run_chunk(
    n: int, master_seed: int, start: int, stop: int, budget: int | None, record_timings: bool
) -> list[TrialRecord]:
    return [run_trial(n, master_seed, t, budget, record_timings) for t in range(start, stop)]


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    size = max(1, -(-total // (workers * _CHUNKS_PER_WORKER)))
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def run_trials(n: int, cfg: ExperimentConfig, pool: ProcessPoolExecutor | None = None) -> list[TrialRecord]:
    """All trials for *n*, ordered by trial index."""
    if pool is None:
        return _run_chunk(n, cfg.master_seed, 0, cfg.trials_per_n, cfg.attempts_budget, cfg.record_timings)

    futures = [
        pool.submit(_run_chunk, n, cfg.master_seed, lo, hi, cfg.attempts_budget, cfg.record_timings)
        for lo, hi in _chunks(cfg.trials_per_n, cfg.parallelism)
    ]
    records: list[TrialRecord] = []
    for future in futures:
        records.extend(future.result())
    return records


# ---------------------------------------------------------------------------
# Aggregation
# ---------------------------------------------------------------------------


def summarize(n: int, records: list[TrialRecord], backtracking: BacktrackOutcome | None) -> SummaryRow | None:
    """Fold the successful trials for *n* into a summary row.

    Returns ``None`` (with a warning) when the statistics are undefined,
    e.g. n = 1 where every trial takes exactly one attempt.
    """
    attempts = [r.attempts for r in records if r.ok]
    excluded = len(records) - len(attempts)
    if excluded:
        logger.warning("n=%d: %d trial(s) exhausted the attempts budget and are excluded", n, excluded)

    try:
        sample = describe(attempts)
    except DegenerateSampleError as exc:
        logger.warning("n=%d: no summary row (%s)", n, exc)
        return None

    try:
        distribution: str | None = best_fit(attempts).family.value
    except (ValueError, FitError) as exc:
        logger.warning("n=%d: distribution fit skipped (%s)", n, exc)
        distribution = None

    back_attempts = backtracking.candidate_tests if backtracking else None
    return SummaryRow(
        n=n,
        mean=sample.mean,
        median=sample.median,
        mode=sample.mode,
        skew=sample.skewness,
        kurtosis=sample.kurtosis,
        lower=sample.lower,
        upper=sample.upper,
        distribution=distribution,
        back_attempts=back_attempts,
        speedup=compute_speedup(back_attempts, sample.mean) if back_attempts is not None else None,
    )


def run_campaign(cfg: ExperimentConfig, *, emit: bool = True) -> CampaignResult:
    """Run every board size in *cfg* and, when *emit* is set, write the outputs.

    Raises:
        OutputExistsError: before any work, if outputs exist and overwrite is off.
        OutputWriteError: if writing fails (a partial manifest is attempted).
    """
    if emit:
        ensure_writable(cfg)

    result = CampaignResult(config=cfg)
    pool = ProcessPoolExecutor(max_workers=cfg.parallelism) if cfg.parallelism > 1 else None
    try:
        for n in cfg.n_values:
            logger.info("n=%d: running %d trials", n, cfg.trials_per_n)
            records = run_trials(n, cfg, pool)
            result.raw[n] = records
            hist = success_histogram(records, cfg.bin_count)
            if hist is not None:
                result.histograms[n] = hist

            bt: BacktrackOutcome | None = None
            if cfg.runs_backtracking(n):
                bt = solve_backtracking(n)
                result.backtracking[n] = bt
            else:
                logger.info("n=%d: backtracking skipped (above %s)", n, cfg.skip_backtracking_above)

            row = summarize(n, records, bt)
            if row is not None:
                result.rows.append(row)
                logger.info("n=%d: mean %.3f attempts, best fit %s", n, row.mean, row.distribution)
    finally:
        if pool is not None:
            pool.shutdown()

    if emit:
        emit_outputs(result.rows, result.raw, cfg, result.histograms)
    return result
