"""
CLI entry point for the Las Vegas N-Queens toolkit.

Usage:
    lv-queens solve --n 8                      # one Las Vegas run, board + metrics
    lv-queens solve --n 8 --algo bt            # backtracking baseline
    lv-queens bench --n-min 4 --n-max 12 --trials 1000 --seed 42 --out results
    lv-queens stats --input results/raw_n8.csv --bins 20
    lv-queens fit --input results/raw_n8.csv

Exit codes: 0 success, 1 usage or validation error, 2 solver error,
3 I/O error.  ``LVQUEENS_SEED`` sets the default seed; ``--seed`` wins.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import NoReturn

import numpy as np
import pandas as pd
from pydantic import ValidationError

from lv_queens import __version__
from lv_queens.analysis.fitting import FitError, fit_families
from lv_queens.analysis.stats import describe, histogram
from lv_queens.data.models import Algorithm, BacktrackOutcome, ExperimentConfig, SummaryRow, TrialOutcome
from lv_queens.export.files import OutputExistsError, OutputWriteError, load_attempts
from lv_queens.harness.campaign import run_campaign
from lv_queens.infra.config import configure_logging, get_settings
from lv_queens.solvers import get_solver
from lv_queens.solvers.board import QueensError, verify_solution

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SOLVER = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with :data:`EXIT_USAGE`."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = _Parser(prog="lv-queens", description="Las Vegas N-Queens solver and benchmark harness")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress (-v for INFO, -vv for DEBUG)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Solve one board and print it")
    solve.add_argument("--n", type=int, required=True, help="Board size")
    solve.add_argument(
        "--algo",
        choices=[a.value for a in Algorithm],
        default=Algorithm.LAS_VEGAS.value,
        help="lv = Las Vegas (default), bt = backtracking",
    )
    solve.add_argument("--seed", type=int, default=None, help="Seed (default: $LVQUEENS_SEED)")

    bench = sub.add_parser("bench", help="Run a seeded campaign over a range of board sizes")
    bench.add_argument("--n-min", type=int, default=4, help="Smallest board size (default: 4)")
    bench.add_argument("--n-max", type=int, default=35, help="Largest board size (default: 35)")
    bench.add_argument("--trials", type=int, default=settings.trials_per_n, help="Trials per board size")
    bench.add_argument("--seed", type=int, default=None, help="Master seed (default: $LVQUEENS_SEED)")
    bench.add_argument("--out", type=Path, default=Path(settings.output_dir), help="Output directory")
    bench.add_argument("--jobs", type=int, default=settings.jobs, help="Worker processes")
    bench.add_argument("--budget", type=int, default=None, help="Per-trial attempts cap")
    bench.add_argument(
        "--skip-backtracking-above",
        type=int,
        default=settings.skip_backtracking_above,
        help="Skip the backtracking baseline above this n",
    )
    bench.add_argument("--bins", type=int, default=settings.bin_count, help="Histogram bins")
    bench.add_argument("--timings", action="store_true", help="Record per-trial wall time in raw CSVs")
    bench.add_argument("--overwrite", action="store_true", help="Replace existing outputs")

    for name, help_text in (("stats", "Describe a raw trial CSV"), ("fit", "Fit distributions to a raw trial CSV")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", type=Path, required=True, help="raw_n{N}.csv written by bench")
        cmd.add_argument("--bins", type=int, default=None, help="Also print a histogram with this many bins")

    return parser


def _resolve_seed(flag: int | None) -> int:
    return flag if flag is not None else get_settings().default_seed


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    outcome = get_solver(args.algo)(args.n, seed)

    print(outcome.solution.render())
    print()
    print(f"  n            {outcome.n}")
    if isinstance(outcome, TrialOutcome):
        print(f"  seed         {outcome.seed}")
        print(f"  attempts     {outcome.attempts}")
        print(f"  restarts     {outcome.restarts}")
    elif isinstance(outcome, BacktrackOutcome):
        print(f"  tests        {outcome.candidate_tests}")
    print(f"  time         {outcome.duration_ns / 1e6:.3f} ms")
    print(f"  columns      {outcome.solution.signature()}")
    print(f"  verified     {'yes' if verify_solution(outcome.solution) else 'NO'}")
    return EXIT_OK


def _print_summary(rows: list[SummaryRow]) -> None:
    frame = pd.DataFrame([r.model_dump() for r in rows])
    with pd.option_context("display.width", 160, "display.max_columns", None):
        print(frame.to_string(index=False, float_format=lambda v: f"{v:.3f}"))


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.n_min > args.n_max:
        print(f"❌ --n-min ({args.n_min}) is larger than --n-max ({args.n_max})", file=sys.stderr)
        return EXIT_USAGE

    cfg = ExperimentConfig(
        n_values=list(range(args.n_min, args.n_max + 1)),
        trials_per_n=args.trials,
        master_seed=_resolve_seed(args.seed),
        attempts_budget=args.budget,
        bin_count=args.bins,
        output_dir=args.out,
        parallelism=args.jobs,
        skip_backtracking_above=args.skip_backtracking_above,
        record_timings=args.timings,
        overwrite=args.overwrite,
    )
    result = run_campaign(cfg)

    if result.rows:
        _print_summary(result.rows)
    excluded = {n: result.excluded(n) for n in cfg.n_values if result.excluded(n)}
    for n, count in excluded.items():
        print(f"⚠️  n={n}: {count} trial(s) hit the attempts budget and were excluded")
    print(f"\n💾 Outputs written to {cfg.output_dir}")
    return EXIT_OK


def _print_histogram(attempts: np.ndarray, bins: int) -> None:
    hist = histogram(attempts, bins)
    print("\n  bin_lo      bin_hi      count")
    for lo, hi, count in zip(hist.bin_edges, hist.bin_edges[1:], hist.counts, strict=False):
        print(f"  {lo:<10.3f}  {hi:<10.3f}  {count}")


def _cmd_stats(args: argparse.Namespace) -> int:
    attempts = load_attempts(args.input)
    stats = describe(attempts)
    for name, value in stats.model_dump().items():
        print(f"  {name:<10} {value:.3f}" if isinstance(value, float) else f"  {name:<10} {value}")
    if args.bins is not None:
        _print_histogram(attempts, args.bins)
    return EXIT_OK


def _cmd_fit(args: argparse.Namespace) -> int:
    attempts = load_attempts(args.input)
    fits = fit_families(attempts)
    for fit in fits.results:
        params = ", ".join(f"{k}={v:.6g}" for k, v in fit.params.items())
        print(
            f"  {fit.family.value:<12} {params:<32} logL={fit.log_likelihood:.3f}  "
            f"KS={fit.ks_statistic:.4f}  AIC={fit.aic:.3f}"
        )
    for family, reason in fits.failures.items():
        print(f"  {family.value:<12} failed: {reason}")
    best = fits.best
    if best is None:
        raise FitError(next(iter(fits.failures)), "no family could be fitted")
    print(f"\n  best fit: {best.family.value}")
    if args.bins is not None:
        _print_histogram(attempts, args.bins)
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "bench": _cmd_bench,
    "stats": _cmd_stats,
    "fit": _cmd_fit,
}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    """Parse *argv*, run the command, and return its exit code."""
    args = _build_parser().parse_args(argv)
    if args.verbose:
        configure_logging(logging.DEBUG if args.verbose > 1 else logging.INFO)
    else:
        configure_logging()

    try:
        return _COMMANDS[args.command](args)
    except KeyboardInterrupt:
        print("\n⚠️  Interrupted by user.", file=sys.stderr)
        return 130
    except QueensError as exc:
        logger.error("Solver error: %s", exc)
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (OutputExistsError, OutputWriteError, OSError) as exc:
        logger.error("I/O error: %s", exc)
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, ValueError, KeyError) as exc:
        print(f"❌ Invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        logger.exception("Unexpected failure")
        print(f"❌ An unexpected error occurred: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
