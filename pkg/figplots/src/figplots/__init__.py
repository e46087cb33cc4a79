"""figplots: six-panel figure rendering for repeater-simulator datasets.

Consumes the simulator's CSV output contract only; it never imports the
simulator itself.
"""

from .dataset import (
    Dataset,
    DatasetError,
    KNOWN_COLUMNS,
    REQUIRED_COLUMNS,
    load_dataset,
)
from .panels import GRID, PANELS, PanelSpec
from .render import output_name, render, render_many

__all__ = [
    "Dataset",
    "DatasetError",
    "KNOWN_COLUMNS",
    "REQUIRED_COLUMNS",
    "load_dataset",
    "GRID",
    "PANELS",
    "PanelSpec",
    "output_name",
    "render",
    "render_many",
]

__version__ = "0.1.0"
