"""Shared test oracles, independent of the library's canonical machinery.

The isomorphism check here is a plain backtracking search over atom
assignments (exhaustive permutations with feasibility pruning), so it
never consults canonical ranks; canonicalization bugs cannot hide from
tests that use it.
"""

from __future__ import annotations

from itertools import permutations

from chemforge.chem import BondOrder, MolGraph


def _atom_key(m: MolGraph, i: int):
    a = m.atoms[i]
    return (a.symbol, a.charge, a.h_count, a.aromatic, a.isotope, m.degree(i))


def graphs_isomorphic(g1: MolGraph, g2: MolGraph) -> bool:
    """True when an atom bijection preserves labels and bonds both ways."""
    n = g1.n_atoms
    if n != g2.n_atoms or g1.n_bonds != g2.n_bonds:
        return False
    if sorted(_atom_key(g1, i) for i in range(n)) != sorted(
        _atom_key(g2, i) for i in range(n)
    ):
        return False
    if n <= 1:
        return True
    if n <= 6:
        return _exhaustive(g1, g2)
    return _backtrack(g1, g2)


def _mapping_ok(g1: MolGraph, g2: MolGraph, perm) -> bool:
    for bond in g1.bonds:
        try:
            if g2.bond_order(perm[bond.a], perm[bond.b]) != bond.order:
                return False
        except ValueError:
            return False
    return True


def _exhaustive(g1: MolGraph, g2: MolGraph) -> bool:
    n = g1.n_atoms
    for perm in permutations(range(n)):
        if all(_atom_key(g1, i) == _atom_key(g2, perm[i]) for i in range(n)):
            if _mapping_ok(g1, g2, perm):
                return True
    return False


def _backtrack(g1: MolGraph, g2: MolGraph) -> bool:
    n = g1.n_atoms
    # Order g1 atoms so each new atom touches the already-mapped prefix
    # when possible, which prunes aggressively.
    order: list[int] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        while stack:
            i = stack.pop()
            order.append(i)
            for j in g1.neighbors(i):
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)

    mapping = [-1] * n
    used = [False] * g2.n_atoms

    def extend(pos: int) -> bool:
        if pos == n:
            return _mapping_ok(g1, g2, mapping)
        i = order[pos]
        for cand in range(g2.n_atoms):
            if used[cand] or _atom_key(g1, i) != _atom_key(g2, cand):
                continue
            ok = True
            for j in g1.neighbors(i):
                if mapping[j] >= 0:
                    if not g2.has_bond(cand, mapping[j]):
                        ok = False
                        break
                    if g2.bond_order(cand, mapping[j]) != g1.bond_order(i, j):
                        ok = False
                        break
            if ok:
                mapping[i] = cand
                used[cand] = True
                if extend(pos + 1):
                    return True
                mapping[i] = -1
                used[cand] = False
        return False

    return extend(0)
