"""Independent MS2 fragment enumerator used as a test oracle.

Deliberately implemented unlike the library simulator: fragments are
frozensets walked with an explicit FIFO queue, and a bond counts as
cleavable when removing it splits the fragment into exactly two
connected parts (checked by direct flood fill, not bridge analysis).
"""

from __future__ import annotations

from collections import deque

from chemforge.chem import MolGraph

_DECAY = 0.5
_BIN = 0.1


def _components_without_edge(
    m: MolGraph, atoms: frozenset[int], drop_a: int, drop_b: int
) -> list[frozenset[int]]:
    remaining = set(atoms)
    parts: list[frozenset[int]] = []
    while remaining:
        start = min(remaining)
        seen = {start}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in m.neighbors(i):
                if j not in atoms or j in seen:
                    continue
                if (i, j) in ((drop_a, drop_b), (drop_b, drop_a)):
                    continue
                seen.add(j)
                queue.append(j)
        parts.append(frozenset(seen))
        remaining -= seen
    return parts


def oracle_ms2(m: MolGraph, depth: int) -> list[tuple[float, float]]:
    """Normalized (mz, intensity) peaks, sorted by mz."""
    contributions: dict[float, float] = {}
    queue: deque[tuple[frozenset[int], int]] = deque(
        [(frozenset(range(m.n_atoms)), 0)]
    )
    while queue:
        atoms, level = queue.popleft()
        mass = 0.0
        for i in sorted(atoms):
            mass += m.atoms[i].mass
        key = round(mass, 9)
        contributions[key] = contributions.get(key, 0.0) + _DECAY**level
        if level >= depth:
            continue
        for bond in m.bonds:
            if bond.a in atoms and bond.b in atoms:
                parts = _components_without_edge(m, atoms, bond.a, bond.b)
                if len(parts) == 2:
                    queue.append((parts[0], level + 1))
                    queue.append((parts[1], level + 1))

    bins: dict[int, tuple[float, float]] = {}
    for mass in sorted(contributions):
        weight = contributions[mass]
        idx = int(mass / _BIN)
        if idx in bins:
            w_mass, w_total = bins[idx]
            bins[idx] = (w_mass + mass * weight, w_total + weight)
        else:
            bins[idx] = (mass * weight, weight)
    top = max(total for _, total in bins.values())
    return [
        (w_mass / w_total, w_total / top) for _, (w_mass, w_total) in sorted(bins.items())
    ]
