"""
Shared test fixtures and helpers.

Provides:
- Cleanup of the CLI log handler between tests
- ``ScriptedSampler``, a deterministic stand-in for the solver's RNG
- Worked-example board states on the 4×4 board
- Small attempt samples and campaign configs
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

import numpy as np
import pytest

from lv_queens.data.models import ExperimentConfig, Position
from lv_queens.solvers.las_vegas import BoardState, new_board, place_queen

# ---------------------------------------------------------------------------
# The CLI installs a stderr handler bound to the stream of the moment;
# drop it after each test so later tests don't log into a closed capture.
# ---------------------------------------------------------------------------


@pytest.fixture(autouse=True)
def _reset_app_logger():
    yield
    app_logger = logging.getLogger("lv_queens")
    for handler in list(app_logger.handlers):
        if getattr(handler, "_lv_queens", False):
            app_logger.removeHandler(handler)
    app_logger.setLevel(logging.NOTSET)


# ---------------------------------------------------------------------------
# Scripted RNG
# ---------------------------------------------------------------------------


def flat(n: int, row: int, col: int) -> int:
    """Flat index of (row, col) on an n×n board."""
    return row * n + col


class ScriptedSampler:
    """Picks a fixed sequence of cells instead of drawing at random.

    Each scripted cell must be in the valid space when its turn comes;
    otherwise the test is wrong and an ``AssertionError`` says which step.
    """

    def __init__(self, n: int, cells: Sequence[tuple[int, int]]) -> None:
        self.n = n
        self.script = [flat(n, r, c) for r, c in cells]
        self.step = 0

    def pick(self, candidates: Sequence[int]) -> int:
        assert self.step < len(self.script), f"script exhausted after {self.step} picks"
        target = self.script[self.step]
        assert target in candidates, f"step {self.step}: cell {target} is not in the valid space"
        self.step += 1
        return list(candidates).index(target)

    @property
    def exhausted(self) -> bool:
        return self.step == len(self.script)


# Dead end on the 4×4 board: three queens, then no valid cell left.
DEAD_END_SCRIPT = [(1, 0), (0, 3), (3, 1)]
# The solution with columns 1 3 0 2.
SOLVING_SCRIPT = [(0, 1), (1, 3), (2, 0), (3, 2)]


@pytest.fixture
def scripted_sampler():
    """Factory fixture: ``scripted_sampler(n, cells)``."""
    return ScriptedSampler


# ---------------------------------------------------------------------------
# Worked-example states (n = 4)
# ---------------------------------------------------------------------------


@pytest.fixture
def board4() -> BoardState:
    return new_board(4)


@pytest.fixture
def board4_one_queen() -> BoardState:
    """Queen on (1, 0): six cells stay valid."""
    return place_queen(new_board(4), flat(4, 1, 0))


@pytest.fixture
def board4_two_queens(board4_one_queen: BoardState) -> BoardState:
    """Queens on (1, 0) and (0, 2): three cells stay valid."""
    return place_queen(board4_one_queen, flat(4, 0, 2))


@pytest.fixture
def table2_attacked() -> set[Position]:
    """The nine cells a queen on (1, 0) attacks on the 4×4 board."""
    cells = [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 2)]
    return {Position(r, c) for r, c in cells}


# ---------------------------------------------------------------------------
# Samples and configs
# ---------------------------------------------------------------------------


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def small_sample() -> list[float]:
    return [1.0, 2.0, 3.0, 4.0]


@pytest.fixture
def make_config(tmp_path: Path):
    """Factory fixture for an ``ExperimentConfig`` writing under ``tmp_path``."""

    def _make(**overrides) -> ExperimentConfig:
        values = {
            "n_values": [4],
            "trials_per_n": 50,
            "master_seed": 42,
            "output_dir": tmp_path / "out",
        }
        values.update(overrides)
        return ExperimentConfig(**values)

    return _make
