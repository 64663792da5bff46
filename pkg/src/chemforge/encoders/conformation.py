"""Conformation encoder: element features + radial distance histograms.

Features depend on coordinates only through pairwise distances, so the
embedding is exactly invariant to rigid motions while remaining
sensitive to scale.  Distances enter a *soft* (Gaussian) histogram so
the features are continuous in the coordinates — a distance near a bin
edge cannot flip bins under floating-point noise.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..chem.elements import ATOMIC_NUMBER
from ..conformer.types import Conformation
from .seeds import seeded_matrix, seeded_vector
from .types import ENCODING_DIMS

CONFORMATION_DIM = ENCODING_DIMS["conformation"]

_MAX_Z = 118
N_RADIAL_BINS = 24
RADIAL_BIN_WIDTH = 0.5  # angstroms; bins span [0, 12)
RADIAL_SOFTNESS = 0.25  # gaussian sigma of the soft binning

_IN_DIM = (_MAX_Z + 1) + N_RADIAL_BINS + 3  # one-hot + histogram + extras


class ConformationEncoder:
    def __init__(self, seed: int = 0) -> None:
        self.seed = seed
        self.W = seeded_matrix(seed, "conformation.W", (_IN_DIM, CONFORMATION_DIM))
        self.b = seeded_vector(seed, "conformation.b", CONFORMATION_DIM) * 0.1

    def _features(self, c: Conformation) -> np.ndarray:
        m = c.graph
        n = m.n_atoms
        feats = np.zeros((n, _IN_DIM))
        centers = (np.arange(N_RADIAL_BINS) + 0.5) * RADIAL_BIN_WIDTH
        coords = np.asarray(c.coords, dtype=np.float64)
        if n > 1:
            deltas = coords[:, None, :] - coords[None, :, :]
            dists = np.sqrt((deltas**2).sum(axis=2))
        for i, atom in enumerate(m.atoms):
            feats[i, ATOMIC_NUMBER[atom.symbol]] = 1.0
            if n > 1:
                others = np.delete(dists[i], i)
                weights = np.exp(
                    -((others[:, None] - centers[None, :]) ** 2)
                    / (2.0 * RADIAL_SOFTNESS**2)
                )
                feats[i, _MAX_Z + 1 : _MAX_Z + 1 + N_RADIAL_BINS] = weights.sum(
                    axis=0
                )
            feats[i, -3] = atom.charge
            feats[i, -2] = atom.h_count
            feats[i, -1] = 1.0 if atom.aromatic else 0.0
        return feats

    def __call__(self, c: Conformation) -> np.ndarray:
        return self._features(c) @ self.W + self.b

    def weight_arrays(self) -> dict[str, np.ndarray]:
        return {"W": self.W, "b": self.b}


@lru_cache(maxsize=4)
def _cached_encoder(seed: int) -> ConformationEncoder:
    return ConformationEncoder(seed)


def encode_conformation(c: Conformation, seed: int = 0) -> np.ndarray:
    """One 512-wide embedding row per heavy atom; rigid-motion invariant."""
    return _cached_encoder(seed)(c)
