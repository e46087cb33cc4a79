"""Rendering of six-panel figures from simulator CSV datasets."""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  -- backend pinned above

from .dataset import load_dataset
from .panels import GRID, PANELS


def output_name(dataset_path) -> str:
    """Deterministic image filename for a dataset: its stem plus ``.png``."""
    return Path(dataset_path).stem + ".png"


def render(dataset_path, out_dir) -> Path:
    """Draw one dataset as a six-panel PNG and return the image path.

    The input file is only read; the image lands in ``out_dir`` (created if
    needed) under a name derived from the dataset stem, so repeated runs
    overwrite the same file.
    """
    data = load_dataset(dataset_path)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    target = out_dir / output_name(data.path)

    t = data.column("t")
    fig, axes = plt.subplots(*GRID, figsize=(9.0, 10.5), sharex=True)
    try:
        for spec in PANELS:
            ax = axes[spec.row][spec.col]
            ax.plot(t, data.column(spec.column), lw=1.0)
            ax.set_title(spec.title, fontsize=10)
            ax.set_ylabel(spec.ylabel)
            if spec.unit_interval:
                ax.set_ylim(0.0, 1.0)
            ax.grid(True, alpha=0.3)
        for col in range(GRID[1]):
            axes[-1][col].set_xlabel("gt")
        fig.suptitle(data.path.stem, fontsize=12)
        fig.tight_layout()
        fig.savefig(target, dpi=110)
    finally:
        plt.close(fig)
    return target


def render_many(dataset_paths, out_dir) -> list:
    """Render several datasets into the same directory, one image each."""
    return [render(path, out_dir) for path in dataset_paths]
