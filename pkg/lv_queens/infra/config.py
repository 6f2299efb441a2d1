"""
Configuration and logging setup.

Single Responsibility: only manages settings and the application logger.
All user-tunable values live here as environment-variable-backed
class attributes so they can be changed via ``.env`` without touching code.
Explicit CLI flags always win over these defaults.
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache

from dotenv import load_dotenv

load_dotenv()

_APP_LOGGER = "lv_queens"
_LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class Settings:
    """Application settings read from environment variables.

    Every attribute has a default so the CLI runs out of the box.
    """

    # -- Campaign defaults -----------------------------------------------------
    default_seed: int = int(os.getenv("LVQUEENS_SEED", "20240611"))
    trials_per_n: int = int(os.getenv("LVQUEENS_TRIALS", "1000"))
    bin_count: int = int(os.getenv("LVQUEENS_BIN_COUNT", "50"))
    jobs: int = int(os.getenv("LVQUEENS_JOBS", "1"))

    # Backtracking above this n is skipped (n=22 already needs ~38M candidate tests)
    skip_backtracking_above: int = int(os.getenv("LVQUEENS_SKIP_BT_ABOVE", "24"))

    # -- Output ----------------------------------------------------------------
    output_dir: str = os.getenv("LVQUEENS_OUTPUT_DIR", "results")

    # -- Distribution fitting --------------------------------------------------
    fit_min_samples: int = int(os.getenv("LVQUEENS_FIT_MIN_SAMPLES", "30"))
    fit_maxiter: int = int(os.getenv("LVQUEENS_FIT_MAXITER", "4000"))
    fit_xatol: float = float(os.getenv("LVQUEENS_FIT_XATOL", "1e-8"))
    fit_fatol: float = float(os.getenv("LVQUEENS_FIT_FATOL", "1e-10"))

    # -- Logging ---------------------------------------------------------------
    log_level: str = os.getenv("LVQUEENS_LOG_LEVEL", "WARNING")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def configure_logging(level: int | str | None = None) -> logging.Logger:
    """Attach a stderr handler to the application logger.

    Only the ``lv_queens.*`` hierarchy is touched so that libraries keep
    their own configuration.  Calling this twice replaces the handler
    rather than stacking a second one.
    """
    app_logger = logging.getLogger(_APP_LOGGER)
    resolved = level if level is not None else get_settings().log_level
    if isinstance(resolved, str):
        resolved = logging.getLevelName(resolved.upper())
        if not isinstance(resolved, int):
            resolved = logging.WARNING
    app_logger.setLevel(resolved)

    for handler in list(app_logger.handlers):
        if getattr(handler, "_lv_queens", False):
            app_logger.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    handler._lv_queens = True  # type: ignore[attr-defined]
    app_logger.addHandler(handler)
    return app_logger
