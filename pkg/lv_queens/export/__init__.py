"""
Export package: campaign output files and pluggable summary formatters.

Subpackage layout::

    export/
    ├── formatter.py   # OutputFormatter ABC, CSV and JSON summary formats
    └── files.py       # raw / histogram / summary / manifest writers

**Adding a new summary format** requires two steps:

1. Subclass ``OutputFormatter`` in ``formatter.py``.
2. Register it in :data:`FORMATTER_REGISTRY` below.
"""

from __future__ import annotations

from lv_queens.export.formatter import (
    CsvSummaryFormatter,
    JsonSummaryFormatter,
    OutputFormatter,
)

__all__ = [
    "OutputFormatter",
    "CsvSummaryFormatter",
    "JsonSummaryFormatter",
    "get_formatter",
    "FORMATTER_REGISTRY",
]


# ---------------------------------------------------------------------------
# Registry: maps short names to formatter classes
# ---------------------------------------------------------------------------

FORMATTER_REGISTRY: dict[str, type[OutputFormatter]] = {
    "csv": CsvSummaryFormatter,
    "json": JsonSummaryFormatter,
}
"""Mapping of format name to formatter class."""


def get_formatter(name: str) -> OutputFormatter:
    """Instantiate a formatter by its registered short name.

    Raises :class:`KeyError` with a helpful message when the name is unknown.
    """
    try:
        cls = FORMATTER_REGISTRY[name]
    except KeyError:
        available = ", ".join(sorted(FORMATTER_REGISTRY))
        raise KeyError(f"Unknown output format {name!r}. Available: {available}") from None
    return cls()
