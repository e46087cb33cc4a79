"""Fixed six-panel layout for the protocol figures."""

from dataclasses import dataclass

#: Grid shape of the figure: (rows, cols).
GRID = (3, 2)


@dataclass(frozen=True)
class PanelSpec:
    """One subplot: which dataset column it draws and where it sits.

    ``unit_interval`` pins the y axis to [0, 1]; success probabilities use
    it so regimes stay visually comparable, while entanglement panels
    auto-scale.
    """

    column: str
    title: str
    ylabel: str
    row: int
    col: int
    unit_interval: bool = False

    def __post_init__(self):
        if not (0 <= self.row < GRID[0] and 0 <= self.col < GRID[1]):
            raise ValueError(
                f"panel position ({self.row}, {self.col}) outside the {GRID} grid"
            )


#: Rows walk the protocol stages (first link, then the two swap branches);
#: the left column shows entanglement, the right column heralding odds.
PANELS = (
    PanelSpec("C14", "pair 1-4 entanglement", "concurrence", 0, 0),
    PanelSpec("P14", "pair 1-4 heralding", "probability", 0, 1,
              unit_interval=True),
    PanelSpec("C18_psi", "pair 1-8 entanglement, symmetric swap",
              "concurrence", 1, 0),
    PanelSpec("P18_psi", "pair 1-8 heralding, symmetric swap",
              "probability", 1, 1, unit_interval=True),
    PanelSpec("C18_psiprime", "pair 1-8 entanglement, antisymmetric swap",
              "concurrence", 2, 0),
    PanelSpec("P18_psiprime", "pair 1-8 heralding, antisymmetric swap",
              "probability", 2, 1, unit_interval=True),
)
