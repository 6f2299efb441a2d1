"""
Solvers package: board oracle, pruning, and the two search strategies.

Subpackage layout::

    solvers/
    ├── board.py         # geometry, brute-force oracle, QueensError hierarchy
    ├── pruning.py       # invalid_points() and the per-n attack table
    ├── las_vegas.py     # randomized pruned placement with restarts
    └── backtracking.py  # deterministic row-by-row baseline
"""

from __future__ import annotations

from collections.abc import Callable

from lv_queens.data.models import Algorithm, BacktrackOutcome, TrialOutcome
from lv_queens.solvers.backtracking import solve_backtracking
from lv_queens.solvers.las_vegas import las_vegas

__all__ = [
    "SOLVER_REGISTRY",
    "get_solver",
    "las_vegas",
    "solve_backtracking",
]

SolverFn = Callable[[int, int], TrialOutcome | BacktrackOutcome]


def _run_backtracking(n: int, seed: int) -> BacktrackOutcome:
    # Deterministic; the seed is accepted only for a uniform call signature.
    return solve_backtracking(n)


SOLVER_REGISTRY: dict[Algorithm, SolverFn] = {
    Algorithm.LAS_VEGAS: las_vegas,
    Algorithm.BACKTRACKING: _run_backtracking,
}
"""Mapping of algorithm → ``solver(n, seed)``. Used by the ``solve`` command."""


def get_solver(algorithm: Algorithm | str) -> SolverFn:
    """Look up a solver by enum member or short name (``"lv"`` / ``"bt"``).

    Raises :class:`KeyError` with the available names when unknown.
    """
    try:
        return SOLVER_REGISTRY[Algorithm(algorithm)]
    except ValueError:
        available = ", ".join(a.value for a in SOLVER_REGISTRY)
        raise KeyError(f"Unknown algorithm {algorithm!r}. Available: {available}") from None
