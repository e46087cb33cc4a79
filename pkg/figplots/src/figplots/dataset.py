"""Loading and validation of simulator CSV datasets.

A dataset is the CSV a simulator run writes: one header row naming the
columns, then one row per time sample.  Concurrence cells may be empty
(the branch never fired); those become NaN so plots show a gap instead
of a fabricated zero.
"""

import csv
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

#: Columns the renderer knows how to interpret.
KNOWN_COLUMNS = (
    "t",
    "C14",
    "P14",
    "C58",
    "P58",
    "C18_psi",
    "P18_psi",
    "C18_psiprime",
    "P18_psiprime",
)

#: Columns the six-panel figure actually draws; all must be present.
REQUIRED_COLUMNS = (
    "t",
    "C14",
    "P14",
    "C18_psi",
    "P18_psi",
    "C18_psiprime",
    "P18_psiprime",
)


class DatasetError(Exception):
    """A dataset file could not be parsed or lacks a needed column."""


@dataclass(frozen=True)
class Dataset:
    """Numeric columns of one simulator run, keyed by header name."""

    path: Path
    columns: tuple
    values: dict

    def __len__(self) -> int:
        return int(self.values[self.columns[0]].size) if self.columns else 0

    def column(self, name: str) -> np.ndarray:
        """Return one column's samples, failing loudly if it is absent."""
        if name not in self.values:
            raise DatasetError(f"{self.path}: missing required column '{name}'")
        return self.values[name]


def _parse_cell(text: str, path, line_no: int, name: str) -> float:
    if text == "":
        return np.nan
    try:
        return float(text)
    except ValueError:
        raise DatasetError(
            f"{path}:{line_no}: could not parse {name}={text!r} as a number"
        ) from None


def load_dataset(path) -> Dataset:
    """Read a simulator CSV into float arrays, one per column.

    Malformed rows raise DatasetError with a ``file:line`` prefix; a file
    with no header or no data rows is rejected the same way.  Extra columns
    beyond the known set are kept but reported once via a warning.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise DatasetError(f"{path}: {exc.strerror or exc}") from None

    rows = [row for row in csv.reader(text.splitlines())]
    if not rows or not rows[0]:
        raise DatasetError(f"{path}:1: empty dataset (no header row)")

    header = tuple(name.strip() for name in rows[0])
    missing = [name for name in REQUIRED_COLUMNS if name not in header]
    if missing:
        raise DatasetError(f"{path}: missing required column '{missing[0]}'")
    unknown = [name for name in header if name not in KNOWN_COLUMNS]
    if unknown:
        warnings.warn(
            f"{path}: ignoring unknown column(s): {', '.join(unknown)}",
            stacklevel=2,
        )

    records: dict = {name: [] for name in header}
    n_rows = 0
    for line_no, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise DatasetError(
                f"{path}:{line_no}: expected {len(header)} fields, got {len(row)}"
            )
        for name, cell in zip(header, row):
            records[name].append(_parse_cell(cell.strip(), path, line_no, name))
        n_rows += 1
    if n_rows == 0:
        raise DatasetError(f"{path}:1: empty dataset (header but no data rows)")

    values = {name: np.asarray(cells, dtype=float) for name, cells in records.items()}
    return Dataset(path=path, columns=header, values=values)
