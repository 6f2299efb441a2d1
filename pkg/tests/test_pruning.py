"""
Tests for invalid-point calculation.

The exhaustive check compares every cell of every board up to 12×12
against the brute-force oracle in ``board.py``.
"""

from __future__ import annotations

import pytest

from lv_queens.data.models import Position
from lv_queens.solvers.board import OffBoardError, brute_force_attacked_set
from lv_queens.solvers.pruning import attack_table, invalid_points


class TestInvalidPoints:
    def test_matches_oracle_exhaustively(self):
        for n in range(1, 13):
            for r in range(n):
                for c in range(n):
                    q = Position(r, c)
                    assert invalid_points(n, q) == brute_force_attacked_set(n, q), (n, q)

    def test_worked_example(self, table2_attacked):
        assert invalid_points(4, Position(1, 0)) == table2_attacked

    def test_single_cell_board(self):
        assert invalid_points(1, Position(0, 0)) == frozenset()

    def test_center_of_5x5(self):
        # row 4 + column 4 + both full diagonals 4 + 4
        assert len(invalid_points(5, Position(2, 2))) == 16

    def test_cardinality_bounds(self):
        for n in range(2, 10):
            for r in range(n):
                for c in range(n):
                    size = len(invalid_points(n, Position(r, c)))
                    assert 3 * (n - 1) <= size <= 4 * (n - 1)

    def test_queen_excluded(self):
        q = Position(2, 3)
        assert q not in invalid_points(6, q)

    @pytest.mark.parametrize("q", [(-1, 0), (0, -1), (4, 0), (0, 4)])
    def test_off_board(self, q):
        with pytest.raises(OffBoardError):
            invalid_points(4, Position(*q))

    def test_reflection_symmetry(self):
        n = 7
        for r in range(n):
            for c in range(n):
                mirrored = {Position(p.row, n - 1 - p.col) for p in invalid_points(n, Position(r, c))}
                assert mirrored == invalid_points(n, Position(r, n - 1 - c))


class TestAttackTable:
    def test_flat_form_of_invalid_points(self):
        n = 6
        table = attack_table(n)
        assert len(table) == n * n
        for k, attacked in enumerate(table):
            expected = sorted(p.row * n + p.col for p in invalid_points(n, Position(k // n, k % n)))
            assert list(attacked) == expected

    def test_memoised(self):
        assert attack_table(5) is attack_table(5)
