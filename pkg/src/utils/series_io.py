"""
File: series_io.py
Description: CSV and JSON readers/writers for series, distributions, surfaces and beta curves.

Numbers are written with 17 significant digits so that reading a file back
gives the exact doubles that were written.
"""

import csv
import json
from collections.abc import Iterable, Sequence
from pathlib import Path

from errors import SeriesFormatError
from stats import SeriesEntry, VarianceSeries
from utils.logging_config import setup_logger
from utils.utils import format_float

logger = setup_logger(__name__)

SERIES_HEADER = ("t", "mean", "variance")
DISTRIBUTION_HEADER = ("t", "x", "p")
SURFACE_HEADER = ("theta_m", "theta_b", "final_variance")
CLASSICAL_BETA_HEADER = ("g", "beta", "r_squared")
QUANTUM_BETA_HEADER = ("theta_b", "beta", "r_squared")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return format_float(value)


def write_table(
    path: Path, header: Sequence[str], rows: Iterable[Sequence], fmt: str = "csv"
) -> Path:
    """Write rows as CSV, or as a JSON list of objects keyed by the header."""
    path = Path(path).with_suffix(f".{fmt}")
    path.parent.mkdir(parents=True, exist_ok=True)

    if fmt == "csv":
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(v) for v in row])
    elif fmt == "json":
        records = [dict(zip(header, row, strict=True)) for row in rows]
        path.write_text(json.dumps(records, indent=2) + "\n")
    else:
        raise ValueError(f"Unknown output format '{fmt}'")

    logger.info(f"✅ Wrote {path}")
    return path


def write_series(path: Path, series: VarianceSeries, fmt: str = "csv") -> Path:
    return write_table(path, SERIES_HEADER, series.entries, fmt)


def read_series(path: Path) -> VarianceSeries:
    """Load a `t,mean,variance` table written by write_series (CSV or JSON)."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise SeriesFormatError(f"Cannot read {path}: {e}")  # noqa: B904

    try:
        if path.suffix == ".json":
            records = json.loads(text)
            rows = [[r[key] for key in SERIES_HEADER] for r in records]
        else:
            reader = csv.reader(text.splitlines())
            header = next(reader, None)
            if header is None or tuple(h.strip() for h in header) != SERIES_HEADER:
                raise SeriesFormatError(
                    f"{path}: expected header {','.join(SERIES_HEADER)}, got {header}"
                )
            rows = [row for row in reader if row]
        entries = []
        for row in rows:
            if len(row) != 3:
                raise SeriesFormatError(f"{path}: row {row} does not have 3 fields")
            entries.append(SeriesEntry(int(row[0]), float(row[1]), float(row[2])))
    except SeriesFormatError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise SeriesFormatError(f"{path}: {e}")  # noqa: B904

    if not entries:
        raise SeriesFormatError(f"{path}: no data rows")
    return VarianceSeries(entries)
