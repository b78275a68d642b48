"""Uniform cell-centered 1-D grid holding the conserved state (rho, rho*u)."""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class GridField:
    """Conserved state on a uniform grid of n_cells cells over [x_min, x_max].

    rho and momentum are cell-centered arrays of length n_cells; t is the
    simulation time the data corresponds to.
    """

    x_min: float
    x_max: float
    n_cells: int
    rho: np.ndarray
    momentum: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        if self.x_max <= self.x_min:
            raise ValueError("x_max must exceed x_min")
        if self.n_cells < 1:
            raise ValueError("n_cells must be positive")
        if len(self.rho) != self.n_cells or len(self.momentum) != self.n_cells:
            raise ValueError("state arrays must have length n_cells")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def x(self) -> np.ndarray:
        """Cell-center coordinates."""
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    @property
    def u(self) -> np.ndarray:
        """Velocity momentum/rho."""
        return self.momentum / self.rho

    def copy(self) -> "GridField":
        return GridField(self.x_min, self.x_max, self.n_cells,
                         self.rho.copy(), self.momentum.copy(), self.t)

    def total_mass(self) -> float:
        return float(np.sum(self.rho)) * self.dx

    def total_momentum(self) -> float:
        return float(np.sum(self.momentum)) * self.dx


def make_grid(x_min: float, x_max: float, n_cells: int) -> GridField:
    """Background field rho = 1, u = 0 on the requested grid."""
    return GridField(x_min, x_max, n_cells,
                     np.ones(n_cells), np.zeros(n_cells), t=0.0)
