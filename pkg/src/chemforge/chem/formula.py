"""Molecular formula, mass, and size queries."""

from __future__ import annotations

from collections import Counter

from .graph import MolGraph


def molecular_formula(m: MolGraph) -> str:
    """Hill-order formula string including implicit hydrogens.

    Carbon first, hydrogen second, all other elements alphabetical; with
    no carbon, everything is alphabetical.  Net charge is appended as a
    trailing sign ('+', '-', '+2', ...).
    """
    counts: Counter[str] = Counter()
    charge = 0
    for atom in m.atoms:
        counts[atom.symbol] += 1
        counts["H"] += atom.h_count
        charge += atom.charge
    if counts["H"] == 0:
        del counts["H"]

    if counts.get("C"):
        symbols = ["C"]
        if counts.get("H"):
            symbols.append("H")
        symbols += sorted(s for s in counts if s not in ("C", "H"))
    else:
        symbols = sorted(counts)

    parts = []
    for symbol in symbols:
        n = counts[symbol]
        parts.append(symbol if n == 1 else f"{symbol}{n}")
    if charge > 0:
        parts.append("+" if charge == 1 else f"+{charge}")
    elif charge < 0:
        parts.append("-" if charge == -1 else str(charge))
    return "".join(parts)


def monoisotopic_mass(m: MolGraph) -> float:
    """Exact mass in Daltons, honoring explicit isotope labels."""
    return m.mass


def heavy_atom_count(m: MolGraph) -> int:
    return m.n_atoms


def net_charge(m: MolGraph) -> int:
    return sum(atom.charge for atom in m.atoms)
