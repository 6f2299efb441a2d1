"""
Deterministic backtracking baseline.

One queen per row, rows ascending from 0, columns tried ascending from 0.
Every (row, col) safety check counts as a candidate test whether or not
the queen fits; that count is the baseline's cost metric.  No value
ordering or forward checking, so the counts stay those of the naive search.
"""

from __future__ import annotations

import logging
import time

from lv_queens.data.models import BacktrackOutcome, Solution
from lv_queens.solvers.board import UnsolvableBoardError, check_solvable

logger = logging.getLogger(__name__)


def solve_backtracking(n: int) -> BacktrackOutcome:
    """Return the first solution in row-major column order and its cost.

    Raises:
        UnsolvableBoardError: for n < 1 or n in {2, 3}.
    """
    check_solvable(n)

    columns = [-1] * n
    col_used = [False] * n
    diag_used = [False] * (2 * n - 1)  # row - col + n - 1
    anti_used = [False] * (2 * n - 1)  # row + col

    tests = 0
    row = 0
    col = 0
    start = time.perf_counter_ns()
    while 0 <= row < n:
        placed = False
        while col < n:
            tests += 1
            d = row - col + n - 1
            a = row + col
            if not (col_used[col] or diag_used[d] or anti_used[a]):
                columns[row] = col
                col_used[col] = diag_used[d] = anti_used[a] = True
                placed = True
                break
            col += 1

        if placed:
            row += 1
            col = 0
            continue

        # Row exhausted: lift the previous row's queen and try its next column.
        row -= 1
        if row >= 0:
            prev = columns[row]
            columns[row] = -1
            col_used[prev] = diag_used[row - prev + n - 1] = anti_used[row + prev] = False
            col = prev + 1

    if row < 0:
        raise UnsolvableBoardError(f"search tree for n={n} exhausted without a solution")

    duration_ns = time.perf_counter_ns() - start
    logger.debug("backtracking n=%d: %d candidate tests", n, tests)
    return BacktrackOutcome(
        n=n,
        solution=Solution.from_columns(columns),
        candidate_tests=tests,
        duration_ns=duration_ns,
    )
