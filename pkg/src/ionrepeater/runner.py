"""Scenario execution: evolve, measure on a time grid, serialize datasets.

One scenario produces one CSV dataset whose header is exactly

    t,C14,P14,C58,P58,C18_psi,P18_psi,C18_psiprime,P18_psiprime

with floats printed to 12 significant digits and degenerate concurrences
serialized as empty fields.  Sweeps run each point concurrently and write one
file per value, named ``<stem>_<field>=<value>.csv`` by a single collector.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .config import ScenarioConfig
from .dynamics import evolve
from .ionstate import initial_protocol_families
from .measurement import swap_from_families

CSV_COLUMNS = ("t", "C14", "P14", "C58", "P58",
               "C18_psi", "P18_psi", "C18_psiprime", "P18_psiprime")


@dataclass(frozen=True)
class ResultRow:
    """One time sample of every protocol observable."""

    t: float
    C14: float | None
    P14: float
    C58: float | None
    P58: float
    C18_psi: float | None
    P18_psi: float
    C18_psiprime: float | None
    P18_psiprime: float

    def values(self) -> tuple:
        return tuple(getattr(self, col) for col in CSV_COLUMNS)


@dataclass(frozen=True)
class ScenarioResult:
    """Dataset plus the per-column maxima summary of one scenario run."""

    config: ScenarioConfig
    rows: tuple[ResultRow, ...]
    summary: dict[str, tuple[float, float]]  # column -> (max, argmax t)

    def column(self, name: str) -> list[float | None]:
        if name not in CSV_COLUMNS:
            raise ValueError(f"unknown column {name!r}")
        return [getattr(row, name) for row in self.rows]


def _summary_columns(bell: str) -> tuple[str, ...]:
    base = ("C14", "P14", "C58", "P58")
    if bell == "PSI_EEGG":
        return base + ("C18_psi", "P18_psi")
    if bell == "PSI_EGGE":
        return base + ("C18_psiprime", "P18_psiprime")
    return base + ("C18_psi", "P18_psi", "C18_psiprime", "P18_psiprime")


def run_scenario(cfg: ScenarioConfig) -> ScenarioResult:
    """Evolve the protocol over the configured grid and measure every sample.

    Both Bell branches are always computed (the row schema is fixed); the
    ``bell`` choice only selects which branches the summary reports.
    """
    t_grid = np.linspace(0.0, cfg.t_max, cfg.n_steps)
    traj = evolve(cfg.params, initial_protocol_families(), t_grid)
    rows = []
    for t, fam in zip(traj.t_grid, traj.families):
        rec = swap_from_families(fam, cfg.outcome_i, cfg.outcome_j, t=float(t))
        rows.append(ResultRow(
            t=float(t),
            C14=rec.pair_i.conc, P14=rec.pair_i.prob,
            C58=rec.pair_j.conc, P58=rec.pair_j.prob,
            C18_psi=rec.swap_psi.conc, P18_psi=rec.swap_psi.prob,
            C18_psiprime=rec.swap_psi_prime.conc,
            P18_psiprime=rec.swap_psi_prime.prob,
        ))

    summary: dict[str, tuple[float, float]] = {}
    for col in _summary_columns(cfg.bell):
        best = None
        for row in rows:
            v = getattr(row, col)
            if v is None:
                continue
            if best is None or v > best[0]:
                best = (v, row.t)
        if best is not None:
            summary[col] = best
    return ScenarioResult(config=cfg, rows=tuple(rows), summary=summary)


def _format_value(v: float | None) -> str:
    return "" if v is None else format(v, ".12g")


def render_csv(rows: Sequence[ResultRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(_format_value(v) for v in row.values()))
    return "\n".join(lines) + "\n"


def write_csv(rows: Sequence[ResultRow], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_csv(rows))
    return path


def sweep_file_name(stem: str, field: str, value: float) -> str:
    return f"{stem}_{field}={format(value, 'g')}.csv"


def run_sweep(cfg: ScenarioConfig, out_stem: str | Path) \
        -> list[tuple[float, Path, ScenarioResult]]:
    """Run every sweep point concurrently; write files in sweep-value order."""
    field = cfg.sweep_field
    values = cfg.sweep_values
    points = cfg.sweep_points()
    workers = max(1, min(len(points), os.cpu_count() or 1))
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_scenario, points))

    out_stem = Path(out_stem)
    outputs = []
    for value, result in zip(values, results):
        path = out_stem.parent / sweep_file_name(out_stem.name, field, value)
        write_csv(result.rows, path)
        outputs.append((value, path, result))
    return outputs


def count_local_maxima(column: Sequence[float | None], window: int = 1,
                       noise_floor: float = 1e-6) -> int:
    """Strict interior local maxima of a sampled column.

    A sample counts when it exceeds the noise floor and is strictly larger
    than every sample within ``window`` indices on both sides (all of which
    must exist and be defined).  Degenerate (None) entries never count and
    block their neighbors.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    vals = np.array([np.nan if v is None else float(v) for v in column])
    if vals.size < 3:
        raise ValueError(f"column must have at least 3 samples, got {vals.size}")
    count = 0
    for k in range(window, vals.size - window):
        v = vals[k]
        if not np.isfinite(v) or v <= noise_floor:
            continue
        neighborhood = np.concatenate([vals[k - window:k], vals[k + 1:k + 1 + window]])
        if np.all(np.isfinite(neighborhood)) and np.all(v > neighborhood):
            count += 1
    return count


def summary_lines(result: ScenarioResult) -> list[str]:
    """Human-readable per-column maxima of one scenario run."""
    lines = []
    for col, (vmax, t_at) in result.summary.items():
        lines.append(f"max {col} = {format(vmax, '.12g')} at gt = {format(t_at, '.12g')}")
    return lines
