"""Conformation container and numeric failure signal."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..chem.graph import MolGraph


class NumericalBlowup(ArithmeticError):
    """Raised when the potential energy stops being finite."""


@dataclass(eq=False)
class Conformation:
    """Heavy-atom 3D coordinates for a molecule.

    ``coords`` is an (n_atoms, 3) float64 array in Ångström; ``energy``
    is in force-field units; ``converged`` reports whether relaxation hit
    its gradient tolerance.
    """

    graph: MolGraph
    coords: np.ndarray
    energy: float = float("nan")
    converged: bool = False

    def __post_init__(self) -> None:
        self.coords = np.asarray(self.coords, dtype=np.float64)
        if self.coords.shape != (self.graph.n_atoms, 3):
            raise ValueError(
                f"coords shape {self.coords.shape} does not match "
                f"{self.graph.n_atoms} atoms"
            )

    def min_separation(self) -> float:
        """Smallest pairwise atom distance; inf for single atoms."""
        n = len(self.coords)
        if n < 2:
            return float("inf")
        diff = self.coords[:, None, :] - self.coords[None, :, :]
        dist = np.sqrt((diff**2).sum(axis=2))
        return float(dist[np.triu_indices(n, k=1)].min())
