"""Rule-based MS2 simulation and peak tokenization.

Fragmentation model: starting from the whole molecule, every acyclic
(bridge) bond of a fragment may cleave, splitting it into two fragments
one depth level down.  Ring bonds never cleave, because cutting one does
not disconnect anything.  Each fragment keeps its implicit hydrogens
(homolytic split, no proton transfer) and is treated as a +1 ion, so
mz equals the neutral monoisotopic mass.

A fragment produced at depth d contributes intensity 0.5**d; collided
mass bins sum their contributions and the spectrum is normalized so the
strongest peak is 1.0.  The precursor is always present at depth 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chem.graph import MolGraph

MERGE_BIN_WIDTH = 0.1
_DECAY = 0.5


@dataclass(frozen=True)
class SpectrumMS2:
    """Sorted (mz, intensity) peaks with the precursor mass."""

    peaks: tuple[tuple[float, float], ...]
    precursor_mz: float

    def __post_init__(self) -> None:
        mzs = [p[0] for p in self.peaks]
        if mzs != sorted(mzs):
            raise ValueError("peaks must be sorted by mz")
        bins = [int(mz / MERGE_BIN_WIDTH) for mz in mzs]
        if len(set(bins)) != len(bins):
            raise ValueError("two peaks share an mz bin")
        for _, intensity in self.peaks:
            if not 0.0 < intensity <= 1.0:
                raise ValueError("intensities must lie in (0, 1]")
        if self.peaks and abs(max(i for _, i in self.peaks) - 1.0) > 1e-12:
            raise ValueError("strongest peak must be normalized to 1.0")

    @property
    def n_peaks(self) -> int:
        return len(self.peaks)


@dataclass(frozen=True)
class MS2Codebook:
    """Maps mz values to token ids by fixed-width binning.

    Ids 0 .. max_mz/bin_width-1 are mass bins; the last two ids are the
    overflow token (mz beyond max_mz) and a padding token.
    """

    bin_width: float = 0.1
    max_mz: float = 1000.0
    reserved: int = 2

    @property
    def n_bins(self) -> int:
        return int(round(self.max_mz / self.bin_width))

    @property
    def vocab_size(self) -> int:
        return self.n_bins + self.reserved

    @property
    def overflow_id(self) -> int:
        return self.n_bins

    @property
    def pad_id(self) -> int:
        return self.n_bins + 1

    def token_for(self, mz: float) -> int:
        idx = int(mz / self.bin_width)
        return idx if idx < self.n_bins else self.overflow_id


def _fragment_mass(m: MolGraph, atoms: tuple[int, ...]) -> float:
    total = 0.0
    for i in atoms:
        total += m.atoms[i].mass
    return total


def _split(
    atoms: tuple[int, ...],
    adjacency: dict[int, tuple[int, ...]],
    cut_a: int,
    cut_b: int,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Atom sets of the two components after removing one bridge bond."""
    members = set(atoms)
    side = {cut_a}
    stack = [cut_a]
    while stack:
        i = stack.pop()
        for j in adjacency[i]:
            if j in members and j not in side and not (i == cut_a and j == cut_b):
                side.add(j)
                stack.append(j)
    one = tuple(sorted(side))
    other = tuple(sorted(members - side))
    return one, other


def simulate_ms2(m: MolGraph, depth: int = 2, seed: int = 0) -> SpectrumMS2:
    """Exhaustive acyclic-cleavage spectrum to the given depth.

    ``seed`` is accepted for interface stability; the simulator is fully
    rule-based and deterministic, so it has no effect.
    """
    del seed
    if m.n_atoms < 1:
        raise ValueError("cannot simulate a spectrum for an empty molecule")
    if depth < 0:
        raise ValueError("depth must be non-negative")

    bridges = set(m.bridges())
    adjacency = {i: m.neighbors(i) for i in range(m.n_atoms)}

    # Accumulate intensity per exact fragment mass.  Intensities are sums
    # of powers of 0.5, which float64 adds exactly.
    contributions: dict[float, float] = {}

    def contribute(atoms: tuple[int, ...], level: int) -> None:
        mass = _fragment_mass(m, atoms)
        key = round(mass, 9)
        contributions[key] = contributions.get(key, 0.0) + _DECAY**level
        if level >= depth:
            return
        atom_set = set(atoms)
        for a, b in bridges:
            if a in atom_set and b in atom_set:
                left, right = _split(atoms, adjacency, a, b)
                contribute(left, level + 1)
                contribute(right, level + 1)

    contribute(tuple(range(m.n_atoms)), 0)

    # Merge contributions that fall into the same mass bin; the reported
    # mz is the intensity-weighted mean of the members.
    bins: dict[int, tuple[float, float]] = {}
    for mass in sorted(contributions):
        weight = contributions[mass]
        idx = int(mass / MERGE_BIN_WIDTH)
        if idx in bins:
            w_mass, w_total = bins[idx]
            bins[idx] = (w_mass + mass * weight, w_total + weight)
        else:
            bins[idx] = (mass * weight, weight)

    top = max(total for _, total in bins.values())
    peaks = tuple(
        (w_mass / w_total, w_total / top)
        for _, (w_mass, w_total) in sorted(bins.items())
    )
    precursor = _fragment_mass(m, tuple(range(m.n_atoms)))
    return SpectrumMS2(peaks=peaks, precursor_mz=precursor)


def tokenize_ms2(s: SpectrumMS2, codebook: MS2Codebook | None = None) -> list[int]:
    """One token per peak: the codebook bin of its mz."""
    codebook = codebook or MS2Codebook()
    return [codebook.token_for(mz) for mz, _ in s.peaks]
