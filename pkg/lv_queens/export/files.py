"""
Campaign output files.

Layout of an output directory::

    raw_n{N}.csv     n,trial,seed,attempts,restarts,duration_ns,status,solution
    hist_n{N}.csv    bin_lo,bin_hi,count   (successful trials only)
    summary.csv      one row per summarized n
    summary.json     the same rows as JSON
    manifest.json    config, artifact version, per-n trial counts, files

All CSVs are UTF-8, comma-separated, ``\\n`` line endings, header first.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from lv_queens import __version__
from lv_queens.analysis.stats import histogram
from lv_queens.data.models import ExperimentConfig, Histogram, Manifest, SummaryRow, TrialRecord
from lv_queens.export import FORMATTER_REGISTRY, get_formatter

logger = logging.getLogger(__name__)

RAW_COLUMNS = list(TrialRecord.model_fields)
HIST_COLUMNS = ["bin_lo", "bin_hi", "count"]
MANIFEST_NAME = "manifest.json"
SUMMARY_STEM = "summary"


class OutputExistsError(Exception):
    """Raised when outputs already exist and overwriting was not requested."""


class OutputWriteError(Exception):
    """Raised when writing outputs fails part-way; points at the partial manifest."""

    def __init__(self, message: str, manifest_path: Path | None) -> None:
        super().__init__(message)
        self.manifest_path = manifest_path


def raw_path(out: Path, n: int) -> Path:
    return out / f"raw_n{n}.csv"


def hist_path(out: Path, n: int) -> Path:
    return out / f"hist_n{n}.csv"


def planned_outputs(cfg: ExperimentConfig) -> list[Path]:
    """Every file a campaign over *cfg* may write."""
    out = cfg.output_dir
    paths = [p for n in cfg.n_values for p in (raw_path(out, n), hist_path(out, n))]
    if cfg.n_values:
        paths += [out / f"{SUMMARY_STEM}{get_formatter(name).file_extension}" for name in FORMATTER_REGISTRY]
    paths.append(out / MANIFEST_NAME)
    return paths


def ensure_writable(cfg: ExperimentConfig) -> None:
    """Refuse to clobber earlier outputs unless ``cfg.overwrite`` is set."""
    if cfg.overwrite:
        return
    existing = [p for p in planned_outputs(cfg) if p.exists()]
    if existing:
        names = ", ".join(p.name for p in existing)
        raise OutputExistsError(f"{cfg.output_dir} already holds {names}; pass --overwrite to replace")


# ---------------------------------------------------------------------------
# Renderers
# ---------------------------------------------------------------------------


def render_raw(records: list[TrialRecord]) -> bytes:
    frame = pd.DataFrame([r.model_dump(mode="json") for r in records], columns=RAW_COLUMNS)
    return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")


def success_histogram(records: list[TrialRecord], bin_count: int) -> Histogram | None:
    """Histogram of the successful trials' attempts; ``None`` when none succeeded."""
    attempts = [r.attempts for r in records if r.ok]
    return histogram(attempts, bin_count) if attempts else None


def render_histogram(hist: Histogram | None) -> bytes:
    rows = list(zip(hist.bin_edges[:-1], hist.bin_edges[1:], hist.counts, strict=True)) if hist is not None else []
    frame = pd.DataFrame(rows, columns=HIST_COLUMNS)
    return frame.to_csv(index=False, lineterminator="\n").encode("utf-8")


def build_manifest(
    cfg: ExperimentConfig,
    raw: dict[int, list[TrialRecord]],
    files: list[Path],
    *,
    error: str | None = None,
) -> Manifest:
    trials = {}
    for n, records in raw.items():
        ok = sum(1 for r in records if r.ok)
        trials[str(n)] = {"total": len(records), "ok": ok, "budget_exhausted": len(records) - ok}
    return Manifest(
        version=__version__,
        status="partial" if error else "complete",
        config=cfg.model_dump(mode="json"),
        trials=trials,
        files=[p.name for p in files],
        error=error,
    )


def _write_manifest(path: Path, manifest: Manifest) -> None:
    path.write_text(json.dumps(manifest.model_dump(mode="json"), indent=2) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def emit_outputs(
    rows: list[SummaryRow],
    raw: dict[int, list[TrialRecord]],
    cfg: ExperimentConfig,
    histograms: dict[int, Histogram] | None = None,
) -> list[Path]:
    """Write raw, histogram, summary and manifest files; returns the paths written.

    *histograms* are the campaign's own per-n histograms; any n missing
    from it is binned from its raw records.  Summary files, one per
    registered format, are skipped when there are no rows.  If a write
    fails, a manifest with ``status: partial`` listing the finished files
    is attempted before :class:`OutputWriteError` is raised.

    Raises:
        OutputExistsError: if outputs exist and ``cfg.overwrite`` is off.
        OutputWriteError: on any I/O failure.
    """
    ensure_writable(cfg)
    histograms = histograms or {}
    out = cfg.output_dir
    manifest_path = out / MANIFEST_NAME
    written: list[Path] = []

    jobs: list[tuple[Path, bytes]] = []
    for n, records in raw.items():
        hist = histograms[n] if n in histograms else success_histogram(records, cfg.bin_count)
        jobs.append((raw_path(out, n), render_raw(records)))
        jobs.append((hist_path(out, n), render_histogram(hist)))
    formatters = [get_formatter(name) for name in FORMATTER_REGISTRY] if rows else []

    try:
        out.mkdir(parents=True, exist_ok=True)
        for path, payload in jobs:
            path.write_bytes(payload)
            written.append(path)
            logger.info("Wrote %s", path)
        for fmt in formatters:
            path = out / f"{SUMMARY_STEM}{fmt.file_extension}"
            fmt.write(rows, path)
            written.append(path)
            logger.info("Wrote %s summary %s", fmt.format_label, path)
        _write_manifest(manifest_path, build_manifest(cfg, raw, written))
    except OSError as exc:
        logger.error("Writing outputs failed: %s", exc)
        try:
            _write_manifest(manifest_path, build_manifest(cfg, raw, written, error=str(exc)))
        except OSError:
            raise OutputWriteError(f"could not write outputs or a partial manifest: {exc}", None) from exc
        raise OutputWriteError(f"outputs incomplete, see {manifest_path}: {exc}", manifest_path) from exc

    written.append(manifest_path)
    return written


def load_raw(path: Path) -> list[TrialRecord]:
    """Parse a ``raw_n{N}.csv`` file back into records."""
    frame = pd.read_csv(path, dtype={"solution": "string", "status": "string"}, keep_default_na=False)
    return [TrialRecord.model_validate(rec) for rec in frame.astype(object).to_dict(orient="records")]


def load_attempts(path: Path) -> np.ndarray:
    """Attempt counts of the successful trials in a raw CSV."""
    return np.array([r.attempts for r in load_raw(path) if r.ok], dtype=float)
