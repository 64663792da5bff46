"""Group-frequency IR synthesis and fixed-width tokenization.

Seven structural groups are detected on the molecular graph and each
occurrence superposes a Gaussian at its canonical wavenumber.  The axis
is wavenumber (cm^-1), the working convention for IR, on a uniform grid
of 1800 points from 400 cm^-1 in steps of 2 cm^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..chem.graph import BondOrder, MolGraph

GRID_START = 400.0
GRID_STEP = 2.0
GRID_POINTS = 1800
N_TOKENS = 50
SIGMA = 20.0
_BASE_AMPLITUDE = 0.5

# Group name -> canonical band center in cm^-1.
GROUP_WAVENUMBERS = {
    "O-H": 3350.0,
    "N-H": 3400.0,
    "C-H": 2950.0,
    "C=O": 1715.0,
    "C=C": 1650.0,
    "aromatic": 1600.0,
    "C-O": 1050.0,
}


@dataclass(frozen=True)
class SpectrumIR:
    """Absorbance on the fixed wavenumber grid, clipped to [0, 1]."""

    intensity: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.intensity, dtype=np.float64)
        if arr.shape != (GRID_POINTS,):
            raise ValueError(f"intensity must have shape ({GRID_POINTS},)")
        if not np.isfinite(arr).all():
            raise ValueError("intensity must be finite")
        if arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError("intensity must lie in [0, 1]")
        object.__setattr__(self, "intensity", arr)

    @property
    def grid(self) -> np.ndarray:
        return GRID_START + GRID_STEP * np.arange(GRID_POINTS)


def detect_groups(m: MolGraph) -> dict[str, int]:
    """Occurrence counts for each IR-active group."""
    counts = dict.fromkeys(GROUP_WAVENUMBERS, 0)
    for atom in m.atoms:
        if atom.h_count > 0:
            if atom.symbol == "O":
                counts["O-H"] += 1
            elif atom.symbol == "N":
                counts["N-H"] += 1
            elif atom.symbol == "C":
                counts["C-H"] += 1
    for bond in m.bonds:
        pair = {m.atoms[bond.a].symbol, m.atoms[bond.b].symbol}
        if bond.order is BondOrder.AROMATIC:
            counts["aromatic"] += 1
        elif bond.order is BondOrder.DOUBLE:
            if pair == {"C", "O"}:
                counts["C=O"] += 1
            elif pair == {"C"}:
                counts["C=C"] += 1
        elif bond.order is BondOrder.SINGLE:
            if pair == {"C", "O"}:
                counts["C-O"] += 1
    return counts


def simulate_ir(m: MolGraph) -> SpectrumIR:
    """Deterministic group-frequency spectrum of one molecule."""
    grid = GRID_START + GRID_STEP * np.arange(GRID_POINTS)
    intensity = np.zeros(GRID_POINTS)
    for group, count in detect_groups(m).items():
        if count == 0:
            continue
        center = GROUP_WAVENUMBERS[group]
        intensity += (
            _BASE_AMPLITUDE
            * count
            * np.exp(-((grid - center) ** 2) / (2.0 * SIGMA**2))
        )
    return SpectrumIR(np.clip(intensity, 0.0, 1.0))


def tokenize_ir(s: SpectrumIR) -> np.ndarray:
    """Reshape the curve into 50 contiguous windows of 36 points."""
    assert GRID_POINTS % N_TOKENS == 0
    return s.intensity.reshape(N_TOKENS, GRID_POINTS // N_TOKENS)


def untokenize_ir(tokens: np.ndarray) -> SpectrumIR:
    """Inverse of tokenize_ir; the reshape is a lossless partition."""
    arr = np.asarray(tokens, dtype=np.float64)
    if arr.shape != (N_TOKENS, GRID_POINTS // N_TOKENS):
        raise ValueError(
            f"expected shape ({N_TOKENS}, {GRID_POINTS // N_TOKENS}), got {arr.shape}"
        )
    return SpectrumIR(arr.reshape(GRID_POINTS))
