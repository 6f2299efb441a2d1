"""
Data models for the Las Vegas N-Queens toolkit.

Pydantic models for everything that crosses a module or file boundary:
board placements, solver outcomes, sample statistics, fitted
distributions, raw trial records and campaign summaries.
"""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

UINT64_MAX = 2**64 - 1

# ---------------------------------------------------------------------------
# Enumerations
# ---------------------------------------------------------------------------


class Algorithm(str, Enum):  # noqa: UP042
    """Solver selectable from the CLI."""

    LAS_VEGAS = "lv"
    BACKTRACKING = "bt"


class TrialStatus(str, Enum):  # noqa: UP042
    OK = "ok"
    BUDGET_EXHAUSTED = "budget_exhausted"


class Family(str, Enum):  # noqa: UP042
    """Candidate distribution families, in tie-break order."""

    GAMMA = "gamma"
    WEIBULL_MIN = "weibull-min"
    PARETO = "pareto"
    EXPONENTIAL = "exponential"


# ---------------------------------------------------------------------------
# Board value objects
# ---------------------------------------------------------------------------


class Position(NamedTuple):
    """A (row, col) cell; (0, 0) is the top-left corner."""

    row: int
    col: int


class Solution(BaseModel):
    """A placement of queens on an n×n board.

    Construction only checks that every queen is on the board.  Whether
    the queens are mutually non-attacking is decided by
    :func:`lv_queens.solvers.board.verify_solution`, so invalid placements
    can still be represented and diagnosed.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Board dimension and expected queen count.")
    queens: list[Position]

    @model_validator(mode="after")
    def _queens_on_board(self) -> Solution:
        for q in self.queens:
            if not (0 <= q.row < self.n and 0 <= q.col < self.n):
                raise ValueError(f"queen {tuple(q)} is off a {self.n}x{self.n} board")
        return self

    @classmethod
    def from_columns(cls, columns: list[int]) -> Solution:
        """Build a one-queen-per-row placement; ``columns[r]`` is row r's column."""
        return cls(n=len(columns), queens=[Position(r, c) for r, c in enumerate(columns)])

    def columns(self) -> list[int]:
        """Column of each row, rows ascending.

        Raises ``ValueError`` unless there is exactly one queen per row.
        """
        by_row = {q.row: q.col for q in self.queens}
        if len(by_row) != self.n or len(self.queens) != self.n:
            raise ValueError("placement does not hold exactly one queen per row")
        return [by_row[r] for r in range(self.n)]

    def signature(self) -> str:
        """Space-separated column list, e.g. ``"1 3 0 2"``."""
        return " ".join(str(c) for c in self.columns())

    def render(self) -> str:
        """Text board with ``Q`` for queens and ``.`` for empty cells."""
        occupied = set(self.queens)
        return "\n".join(
            " ".join("Q" if Position(r, c) in occupied else "." for c in range(self.n)) for r in range(self.n)
        )


# ---------------------------------------------------------------------------
# Solver outcomes
# ---------------------------------------------------------------------------


class TrialOutcome(BaseModel):
    """Result of one Las Vegas run."""

    n: int
    solution: Solution
    attempts: int = Field(description="Queen placements across all passes, never reset on restart.")
    restarts: int = Field(ge=0, description="Dead-end board resets.")
    seed: int
    duration_ns: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _attempts_cover_board(self) -> TrialOutcome:
        if self.attempts < self.n:
            raise ValueError(f"attempts ({self.attempts}) cannot be below n ({self.n})")
        return self


class BacktrackOutcome(BaseModel):
    """Result of the deterministic backtracking baseline."""

    n: int
    solution: Solution
    candidate_tests: int = Field(description="(row, col) cells examined for safety, failures included.")
    duration_ns: int = Field(default=0, ge=0)


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------


class SampleStats(BaseModel):
    """Descriptive statistics of an attempts sample."""

    count: int
    mean: float
    median: float
    mode: float = Field(description="Smallest of the most frequent values.")
    skewness: float = Field(description="Fisher-Pearson g1, biased central-moment form.")
    kurtosis: float = Field(description="Excess kurtosis, biased central-moment form.")
    lower: float = Field(description="2.5th percentile (linear interpolation).")
    upper: float = Field(description="97.5th percentile (linear interpolation).")


class FitResult(BaseModel):
    """Maximum-likelihood fit of one family (location fixed at 0)."""

    family: Family
    params: dict[str, float]
    log_likelihood: float
    ks_statistic: float = Field(ge=0.0, le=1.0)
    aic: float = 0.0
    iterations: int = 0


class Histogram(BaseModel):
    """Equal-width histogram; the last bin is right-closed."""

    bin_edges: list[float]
    counts: list[int]

    @model_validator(mode="after")
    def _shape(self) -> Histogram:
        if len(self.counts) != len(self.bin_edges) - 1:
            raise ValueError("need exactly one more edge than counts")
        if any(b <= a for a, b in zip(self.bin_edges, self.bin_edges[1:], strict=False)):
            raise ValueError("bin edges must be strictly ascending")
        return self

    @property
    def total(self) -> int:
        return sum(self.counts)


# ---------------------------------------------------------------------------
# Harness records
# ---------------------------------------------------------------------------


class TrialRecord(BaseModel):
    """One row of ``raw_n{N}.csv``."""

    n: int
    trial: int
    seed: int
    attempts: int
    restarts: int
    duration_ns: int = 0
    status: TrialStatus = TrialStatus.OK
    solution: str = Field(default="", description="Solution signature; empty unless status is ok.")

    @property
    def ok(self) -> bool:
        return self.status is TrialStatus.OK


class SummaryRow(BaseModel):
    """One board size's statistics; fields follow the summary table column order."""

    n: int
    mean: float
    median: float
    mode: float
    skew: float
    kurtosis: float
    lower: float
    upper: float
    distribution: str | None = None
    back_attempts: int | None = None
    speedup: float | None = None


class ExperimentConfig(BaseModel):
    """Everything that determines a campaign's outputs."""

    n_values: list[int] = Field(default_factory=list)
    trials_per_n: int = Field(default=1000, ge=1)
    master_seed: int = Field(ge=0, le=UINT64_MAX)
    attempts_budget: int | None = Field(default=None, ge=1)
    bin_count: int = Field(default=50, ge=1)
    output_dir: Path = Path("results")
    parallelism: int = Field(default=1, ge=1)
    skip_backtracking_above: int | None = 24
    record_timings: bool = False
    overwrite: bool = False

    @field_validator("n_values")
    @classmethod
    def _solvable_sizes(cls, values: list[int]) -> list[int]:
        bad = [n for n in values if not (n == 1 or n >= 4)]
        if bad:
            raise ValueError(f"board sizes must be 1 or at least 4, got {bad}")
        if len(set(values)) != len(values):
            raise ValueError("board sizes must not repeat")
        return values

    def runs_backtracking(self, n: int) -> bool:
        return self.skip_backtracking_above is None or n <= self.skip_backtracking_above


class CampaignResult(BaseModel):
    """In-memory result of :func:`lv_queens.harness.campaign.run_campaign`."""

    config: ExperimentConfig
    rows: list[SummaryRow] = Field(default_factory=list)
    raw: dict[int, list[TrialRecord]] = Field(default_factory=dict)
    histograms: dict[int, Histogram] = Field(default_factory=dict)
    backtracking: dict[int, BacktrackOutcome] = Field(default_factory=dict)

    def excluded(self, n: int) -> int:
        """Trials for *n* left out of the statistics (budget exhausted)."""
        return sum(1 for r in self.raw.get(n, []) if not r.ok)


class Manifest(BaseModel):
    """Contents of ``manifest.json``."""

    artifact: str = "lv-queens"
    version: str
    status: str = Field(description="'complete' or 'partial'.")
    config: dict
    trials: dict[str, dict[str, int]] = Field(default_factory=dict)
    files: list[str] = Field(default_factory=list)
    error: str | None = None
