"""
Board geometry and the brute-force validity oracle.

Nothing in this module is shared with either solver: the oracle scans
cells and pairs directly so that it can independently check their output.
"""

from __future__ import annotations

import logging
from itertools import combinations

from lv_queens.data.models import Position, Solution

logger = logging.getLogger(__name__)


class QueensError(Exception):
    """Base class for solver-level errors (CLI exit code 2)."""


class OffBoardError(QueensError):
    """Raised when a position lies outside the n×n board."""


class UnsolvableBoardError(QueensError):
    """Raised for board sizes with no solution (n = 2, 3) or n < 1."""


def check_on_board(n: int, q: Position) -> None:
    if not (0 <= q.row < n and 0 <= q.col < n):
        raise OffBoardError(f"position {tuple(q)} is off a {n}x{n} board")


def check_solvable(n: int) -> None:
    """Reject sizes a solver cannot finish on."""
    if n < 1:
        raise UnsolvableBoardError(f"board size must be positive, got {n}")
    if n in (2, 3):
        raise UnsolvableBoardError(f"no {n}-queens solution exists")


def attacks(a: Position, b: Position) -> bool:
    """True when queens on *a* and *b* share a row, column or diagonal."""
    return a.row == b.row or a.col == b.col or a.row + a.col == b.row + b.col or a.row - a.col == b.row - b.col


def find_conflict(solution: Solution) -> tuple[Position, Position] | None:
    """First attacking pair in placement order, or ``None``."""
    for a, b in combinations(solution.queens, 2):
        if attacks(a, b):
            return a, b
    return None


def verify_solution(solution: Solution) -> bool:
    """Check *solution* pairwise: n queens, none attacking another."""
    if len(solution.queens) != solution.n:
        logger.debug("expected %d queens, found %d", solution.n, len(solution.queens))
        return False
    conflict = find_conflict(solution)
    if conflict is not None:
        logger.debug("queens %s and %s attack each other", tuple(conflict[0]), tuple(conflict[1]))
        return False
    return True


def brute_force_attacked_set(n: int, q: Position) -> set[Position]:
    """Every other cell attacked by a queen on *q*, by scanning all n² cells."""
    check_on_board(n, q)
    return {p for r in range(n) for c in range(n) if (p := Position(r, c)) != q and attacks(q, p)}


def transform(solution: Solution, k: int) -> Solution:
    """Apply the k-th of the 8 board symmetries (k in 0..7).

    k mod 4 quarter-turns clockwise, then a horizontal mirror when k ≥ 4.
    """
    if not 0 <= k < 8:
        raise ValueError(f"symmetry index must be in 0..7, got {k}")
    last = solution.n - 1
    queens = list(solution.queens)
    for _ in range(k % 4):
        queens = [Position(q.col, last - q.row) for q in queens]
    if k >= 4:
        queens = [Position(q.row, last - q.col) for q in queens]
    return Solution(n=solution.n, queens=queens)
