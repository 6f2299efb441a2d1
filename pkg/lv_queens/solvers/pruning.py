"""
Invalid-point calculation: the cells a newly placed queen makes unusable.

Walks the queen's column, row and both diagonals in a single pass over
0..n-1, collecting into a set so intersections are counted once.
Diagonal cells that fall off the board are skipped while generating;
the result equals the generate-then-filter definition.
"""

from __future__ import annotations

from functools import lru_cache

from lv_queens.data.models import Position
from lv_queens.solvers.board import check_on_board


def invalid_points(n: int, q: Position) -> frozenset[Position]:
    """Cells attacked by a queen on *q*, excluding *q* itself.

    Raises:
        OffBoardError: if *q* is not on the n×n board.
    """
    check_on_board(n, q)
    i, j = q
    points: set[Position] = set()
    for x in range(n):
        points.add(Position(x, j))
        points.add(Position(i, x))
        anti = i + j - x
        if 0 <= anti < n:
            points.add(Position(x, anti))
        diag = x - i + j
        if 0 <= diag < n:
            points.add(Position(x, diag))
    points.discard(q)
    return frozenset(points)


@lru_cache(maxsize=64)
def attack_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Flat-index form of :func:`invalid_points` for every cell of an n×n board.

    ``attack_table(n)[k]`` lists the flat indices ``row * n + col``
    attacked from flat cell ``k``, ascending.  Memoised per board size.
    """
    return tuple(
        tuple(sorted(p.row * n + p.col for p in invalid_points(n, Position(k // n, k % n)))) for k in range(n * n)
    )
