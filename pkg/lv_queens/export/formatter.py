"""
Summary formatter abstraction.

Provides :class:`OutputFormatter`, the base class every summary export
format implements, plus the CSV and JSON formats written by a campaign.

New formats subclass ``OutputFormatter`` and are registered in
:data:`lv_queens.export.FORMATTER_REGISTRY`.
"""

from __future__ import annotations

import abc
import io
import json
from pathlib import Path

import pandas as pd

from lv_queens.data.models import SummaryRow

SUMMARY_COLUMNS = list(SummaryRow.model_fields)
"""Summary columns, in summary-table order: n, mean, …, back_attempts, speedup."""


class OutputFormatter(abc.ABC):
    """Base class every summary format must implement."""

    @property
    @abc.abstractmethod
    def file_extension(self) -> str:
        """File extension **including the dot** (e.g. ``'.csv'``)."""

    @property
    @abc.abstractmethod
    def format_label(self) -> str:
        """Human-readable label used in log messages."""

    @abc.abstractmethod
    def render(self, rows: list[SummaryRow]) -> bytes:
        """Render *rows* into UTF-8 encoded bytes."""

    @abc.abstractmethod
    def parse(self, data: bytes) -> list[SummaryRow]:
        """Inverse of :meth:`render`."""

    def write(self, rows: list[SummaryRow], path: Path) -> None:
        path.write_bytes(self.render(rows))


class CsvSummaryFormatter(OutputFormatter):
    """Comma-separated, header row, plain decimal numbers, empty cell for missing values."""

    @property
    def file_extension(self) -> str:
        return ".csv"

    @property
    def format_label(self) -> str:
        return "CSV"

    def render(self, rows: list[SummaryRow]) -> bytes:
        frame = pd.DataFrame([r.model_dump() for r in rows], columns=SUMMARY_COLUMNS)
        frame = frame.astype({"n": "int64", "back_attempts": "Int64"})
        return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")

    def parse(self, data: bytes) -> list[SummaryRow]:
        frame = pd.read_csv(
            io.BytesIO(data),
            dtype={"distribution": "string", "back_attempts": "Int64"},
            float_precision="round_trip",
        )
        records = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
        return [SummaryRow.model_validate(rec) for rec in records]


class JsonSummaryFormatter(OutputFormatter):
    """A JSON array of row objects; floats round-trip exactly."""

    @property
    def file_extension(self) -> str:
        return ".json"

    @property
    def format_label(self) -> str:
        return "JSON"

    def render(self, rows: list[SummaryRow]) -> bytes:
        payload = [r.model_dump(mode="json") for r in rows]
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")

    def parse(self, data: bytes) -> list[SummaryRow]:
        return [SummaryRow.model_validate(rec) for rec in json.loads(data)]
