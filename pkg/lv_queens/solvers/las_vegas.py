"""
Las Vegas N-Queens solver with state pruning.

Each pass starts from an empty board whose valid space holds every cell.
A queen is dropped on a uniformly random valid cell, the cells it attacks
are pruned, and the pass repeats until either n queens stand (success) or
the valid space runs dry first (dead end: count a restart, wipe the board,
go again).  Every placement counts as one attempt, across all passes.

The valid space is a contiguous list plus a slot map (flat index → list
position), so drawing and removing a cell are both O(1) via swap-remove.
The validity mask is kept in lockstep with it for auditing and display.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from lv_queens.data.models import Position, Solution, TrialOutcome
from lv_queens.solvers.board import QueensError, attacks, check_solvable
from lv_queens.solvers.pruning import attack_table

logger = logging.getLogger(__name__)

# Uniform draws are generated in blocks to keep per-placement overhead low.
_DRAW_BLOCK = 4096


class InvalidPlacementError(QueensError):
    """Raised when a queen is placed on a cell outside the valid space."""


class InvariantViolationError(QueensError):
    """Raised when an audited state no longer matches the brute-force oracle."""


class BudgetExhaustedError(QueensError):
    """Raised when a trial uses up its attempts budget before succeeding."""

    def __init__(self, n: int, attempts: int, restarts: int) -> None:
        super().__init__(f"n={n}: attempts budget of {attempts} exhausted after {restarts} restarts")
        self.n = n
        self.attempts = attempts
        self.restarts = restarts


# ---------------------------------------------------------------------------
# Randomness
# ---------------------------------------------------------------------------


class CellSampler(Protocol):
    """Chooses the next queen cell.

    ``pick`` returns a position into *candidates* (not a cell index).
    """

    def pick(self, candidates: Sequence[int]) -> int: ...


class NumpySampler:
    """Uniform sampler backed by ``numpy.random.default_rng`` (PCG64)."""

    def __init__(self, seed: int) -> None:
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self._block: list[float] = []
        self._next = 0

    def pick(self, candidates: Sequence[int]) -> int:
        if self._next >= len(self._block):
            self._block = self._rng.random(_DRAW_BLOCK).tolist()
            self._next = 0
        u = self._block[self._next]
        self._next += 1
        return int(u * len(candidates))


# ---------------------------------------------------------------------------
# Board state
# ---------------------------------------------------------------------------


@dataclass
class BoardState:
    """Working state of one Las Vegas pass."""

    n: int
    valid_space: list[int]
    queens: list[Position] = field(default_factory=list)
    _cells: bytearray = field(default_factory=bytearray, repr=False)
    _slot: list[int] = field(default_factory=list, repr=False)

    @property
    def validity(self) -> np.ndarray:
        """n×n boolean mask (True = not attacked); a live view, not a copy.

        Queen cells stay True, as in the returned result matrix.
        """
        return np.frombuffer(self._cells, dtype=np.bool_).reshape(self.n, self.n)

    def is_valid(self, flat_index: int) -> bool:
        return 0 <= flat_index < self.n * self.n and self._slot[flat_index] >= 0

    def _discard(self, flat_index: int) -> None:
        i = self._slot[flat_index]
        if i < 0:
            return
        last = self.valid_space.pop()
        if last != flat_index:
            self.valid_space[i] = last
            self._slot[last] = i
        self._slot[flat_index] = -1


def new_board(n: int) -> BoardState:
    """Fresh state: every cell valid, ``valid_space`` = 0..n²−1."""
    cells = n * n
    return BoardState(
        n=n,
        valid_space=list(range(cells)),
        _cells=bytearray(b"\x01" * cells),
        _slot=list(range(cells)),
    )


def place_queen(state: BoardState, flat_index: int) -> BoardState:
    """Place a queen on *flat_index* and prune what it attacks.

    Mutates and returns *state*.

    Raises:
        InvalidPlacementError: if *flat_index* is not in the valid space.
    """
    if not state.is_valid(flat_index):
        raise InvalidPlacementError(f"cell {flat_index} is not in the valid space of this {state.n}x{state.n} board")
    n = state.n
    state._discard(flat_index)
    state.queens.append(Position(flat_index // n, flat_index % n))
    cells = state._cells
    for k in attack_table(n)[flat_index]:
        cells[k] = 0
        state._discard(k)
    return state


def audit_invariant(state: BoardState) -> bool:
    """Recheck the valid space against the brute-force oracle.

    True iff ``valid_space`` holds exactly the unoccupied cells that no
    placed queen attacks, without duplicates, and the mask is set on
    exactly those cells plus the queen cells.
    """
    n = state.n
    occupied = set(state.queens)
    expected = {
        r * n + c
        for r in range(n)
        for c in range(n)
        if (p := Position(r, c)) not in occupied and not any(attacks(q, p) for q in state.queens)
    }
    listed = set(state.valid_space)
    if len(listed) != len(state.valid_space) or listed != expected:
        return False
    queen_cells = {q.row * n + q.col for q in state.queens}
    mask = state.validity.reshape(-1)
    return set(np.flatnonzero(mask).tolist()) == expected | queen_cells


def render_state(state: BoardState) -> str:
    """Grid with ``Q`` (queen), ``V`` (valid) and ``X`` (pruned) cells."""
    queens = set(state.queens)
    rows = []
    for r in range(state.n):
        line = []
        for c in range(state.n):
            if Position(r, c) in queens:
                line.append("Q")
            elif state.is_valid(r * state.n + c):
                line.append("V")
            else:
                line.append("X")
        rows.append(" ".join(line))
    return "\n".join(rows)


# ---------------------------------------------------------------------------
# Solver
# ---------------------------------------------------------------------------


def las_vegas(
    n: int,
    seed: int,
    *,
    sampler: CellSampler | None = None,
    budget: int | None = None,
    audit: bool = False,
) -> TrialOutcome:
    """Solve n-queens by random pruned placement with full restarts.

    Args:
        n: Board size; 2, 3 and non-positive sizes are rejected.
        seed: Seed for the default :class:`NumpySampler`; recorded in the outcome.
        sampler: Replaces the seeded sampler (e.g. a scripted fake).
        budget: Maximum attempts before :class:`BudgetExhaustedError`.
        audit: Check :func:`audit_invariant` after every placement.

    Raises:
        UnsolvableBoardError: for n < 1 or n in {2, 3}.
        BudgetExhaustedError: when *budget* runs out.
        InvariantViolationError: when auditing finds a desynchronised state.
    """
    check_solvable(n)
    if sampler is None:
        sampler = NumpySampler(seed)

    attempts = 0
    restarts = 0
    start = time.perf_counter_ns()
    while True:
        state = new_board(n)
        while len(state.queens) < n and state.valid_space:
            if budget is not None and attempts >= budget:
                raise BudgetExhaustedError(n, attempts, restarts)
            flat = state.valid_space[sampler.pick(state.valid_space)]
            place_queen(state, flat)
            attempts += 1
            if audit and not audit_invariant(state):
                raise InvariantViolationError(f"valid space out of sync after placing on cell {flat}")

        if len(state.queens) == n:
            # n queens cover every row, so nothing can remain valid.
            if state.valid_space:
                raise InvariantViolationError(f"{len(state.valid_space)} cells still valid after {n} queens")
            break

        restarts += 1
        logger.debug("n=%d dead end after %d queens (restart %d)", n, len(state.queens), restarts)

    duration_ns = time.perf_counter_ns() - start
    solution = Solution(n=n, queens=sorted(state.queens))
    return TrialOutcome(
        n=n,
        solution=solution,
        attempts=attempts,
        restarts=restarts,
        seed=seed,
        duration_ns=duration_ns,
    )
