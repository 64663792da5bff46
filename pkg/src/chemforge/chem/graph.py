"""Molecular graph model: atoms, bonds, and the containing graph.

Atoms and bonds are immutable; a MolGraph owns parallel tuples of both
plus a precomputed adjacency map.  Hydrogen counts live on the atoms as
implicit counts rather than explicit nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import IntEnum
from typing import Iterable, Iterator, Sequence

from .elements import ATOMIC_NUMBER, H_MASS, isotope_mass, monoisotopic_element_mass


class BondOrder(IntEnum):
    SINGLE = 1
    DOUBLE = 2
    TRIPLE = 3
    AROMATIC = 4

    @property
    def order_value(self) -> float:
        """Numeric bond order; aromatic counts as 1.5."""
        return 1.5 if self is BondOrder.AROMATIC else float(self.value)


@dataclass(frozen=True, slots=True)
class AtomNode:
    """One heavy atom.  ``isotope`` is 0 for the natural mix."""

    symbol: str
    charge: int = 0
    h_count: int = 0
    aromatic: bool = False
    isotope: int = 0

    def __post_init__(self) -> None:
        if self.symbol not in ATOMIC_NUMBER:
            raise ValueError(f"unknown element symbol {self.symbol!r}")
        if self.h_count < 0:
            raise ValueError("negative hydrogen count")
        if self.isotope < 0:
            raise ValueError("negative isotope mass number")

    @property
    def atomic_number(self) -> int:
        return ATOMIC_NUMBER[self.symbol]

    @property
    def mass(self) -> float:
        """Exact atom mass including attached hydrogens."""
        if self.isotope:
            own = isotope_mass(self.symbol, self.isotope)
        else:
            own = monoisotopic_element_mass(self.symbol)
        return own + self.h_count * H_MASS


@dataclass(frozen=True, slots=True)
class BondEdge:
    """Undirected bond between atom indices ``a`` and ``b`` (a < b)."""

    a: int
    b: int
    order: BondOrder = BondOrder.SINGLE

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("bond endpoints must differ")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)
        if self.a < 0:
            raise ValueError("negative atom index in bond")

    def other(self, idx: int) -> int:
        if idx == self.a:
            return self.b
        if idx == self.b:
            return self.a
        raise ValueError(f"atom {idx} is not an endpoint of this bond")


def _normalize_bond(a: int, b: int, order: BondOrder) -> BondEdge:
    lo, hi = (a, b) if a < b else (b, a)
    return BondEdge(lo, hi, order)


@dataclass(frozen=True)
class MolGraph:
    """Immutable molecular graph.

    Bonds are stored sorted by endpoint pair and deduplicated; the
    adjacency map is built once at construction.
    """

    atoms: tuple[AtomNode, ...]
    bonds: tuple[BondEdge, ...]
    source_smiles: str | None = field(default=None, compare=False)
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _bond_lookup: dict[tuple[int, int], BondOrder] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        n = len(self.atoms)
        seen: dict[tuple[int, int], BondOrder] = {}
        for bond in self.bonds:
            if bond.b >= n:
                raise ValueError(
                    f"bond ({bond.a}, {bond.b}) references atom {bond.b} "
                    f"but the graph has {n} atoms"
                )
            if bond.order is BondOrder.AROMATIC and not (
                self.atoms[bond.a].aromatic and self.atoms[bond.b].aromatic
            ):
                raise ValueError(
                    f"aromatic bond ({bond.a}, {bond.b}) between non-aromatic atoms"
                )
            key = (bond.a, bond.b)
            if key in seen:
                raise ValueError(f"duplicate bond between atoms {bond.a} and {bond.b}")
            seen[key] = bond.order
        ordered = tuple(
            BondEdge(a, b, order) for (a, b), order in sorted(seen.items())
        )
        object.__setattr__(self, "bonds", ordered)
        adj: list[list[int]] = [[] for _ in range(n)]
        for bond in ordered:
            adj[bond.a].append(bond.b)
            adj[bond.b].append(bond.a)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(v)) for v in adj))
        object.__setattr__(self, "_bond_lookup", dict(seen))

    # -- basic queries ------------------------------------------------

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def n_bonds(self) -> int:
        return len(self.bonds)

    def neighbors(self, idx: int) -> tuple[int, ...]:
        return self._adj[idx]

    def degree(self, idx: int) -> int:
        return len(self._adj[idx])

    def bond_order(self, a: int, b: int) -> BondOrder:
        key = (a, b) if a < b else (b, a)
        try:
            return self._bond_lookup[key]
        except KeyError:
            raise ValueError(f"no bond between atoms {a} and {b}") from None

    def has_bond(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        return key in self._bond_lookup

    def heavy_bond_degree(self, idx: int) -> float:
        """Sum of bond orders at an atom, aromatic counted as 1.5."""
        return sum(self.bond_order(idx, j).order_value for j in self._adj[idx])

    @property
    def mass(self) -> float:
        """Monoisotopic molecular mass including implicit hydrogens."""
        return sum(atom.mass for atom in self.atoms)

    # -- structure ----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components as sorted atom-index lists."""
        seen = [False] * self.n_atoms
        comps: list[list[int]] = []
        for start in range(self.n_atoms):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in self._adj[i]:
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bridges(self) -> list[tuple[int, int]]:
        """Bonds whose removal disconnects the graph (acyclic bonds).

        Iterative Tarjan bridge finding; returns (a, b) pairs with a < b.
        """
        n = self.n_atoms
        disc = [-1] * n
        low = [0] * n
        out: list[tuple[int, int]] = []
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            # stack frames: (node, parent, iterator over neighbors)
            stack = [(root, -1, iter(self._adj[root]))]
            disc[root] = low[root] = timer
            timer += 1
            parent_edge_used: dict[int, bool] = {root: False}
            while stack:
                node, parent, it = stack[-1]
                advanced = False
                for nb in it:
                    if disc[nb] == -1:
                        disc[nb] = low[nb] = timer
                        timer += 1
                        parent_edge_used[nb] = False
                        stack.append((nb, node, iter(self._adj[nb])))
                        advanced = True
                        break
                    if nb == parent and not parent_edge_used[node]:
                        # Skip the tree edge back to the parent exactly once
                        # so parallel-free multigraph semantics stay correct.
                        parent_edge_used[node] = True
                        continue
                    low[node] = min(low[node], disc[nb])
                if not advanced:
                    stack.pop()
                    if stack:
                        pnode = stack[-1][0]
                        low[pnode] = min(low[pnode], low[node])
                        if low[node] > disc[pnode]:
                            out.append((min(pnode, node), max(pnode, node)))
        return sorted(out)

    def ring_bonds(self) -> set[tuple[int, int]]:
        """Bonds that sit on at least one cycle."""
        bridge_set = set(self.bridges())
        return {
            (b.a, b.b) for b in self.bonds if (b.a, b.b) not in bridge_set
        }

    def ring_atoms(self) -> set[int]:
        out: set[int] = set()
        for a, b in self.ring_bonds():
            out.add(a)
            out.add(b)
        return out

    def sssr_like_rings(self) -> list[list[int]]:
        """Small rings, one per independent cycle.

        For each ring bond in turn, finds the shortest cycle through it by
        BFS with the bond removed.  Good enough for layout and for the
        fused systems that occur in the seed sets; not a strict SSSR.
        """
        rings: list[list[int]] = []
        covered: set[tuple[int, int]] = set()
        n_cycles = self.n_bonds - self.n_atoms + len(self.components())
        for bond in sorted(self.ring_bonds()):
            if len(rings) >= n_cycles:
                break
            if bond in covered:
                continue
            cycle = self._shortest_cycle_through(bond)
            if cycle is None:
                continue
            rings.append(cycle)
            for i in range(len(cycle)):
                a, b = cycle[i], cycle[(i + 1) % len(cycle)]
                covered.add((min(a, b), max(a, b)))
        return rings

    def _shortest_cycle_through(self, bond: tuple[int, int]) -> list[int] | None:
        src, dst = bond
        # BFS from src to dst avoiding the direct edge.
        prev = {src: -1}
        queue = [src]
        while queue:
            nxt: list[int] = []
            for i in queue:
                for j in self._adj[i]:
                    if i == src and j == dst:
                        continue
                    if j not in prev:
                        prev[j] = i
                        if j == dst:
                            path = [j]
                            while path[-1] != src:
                                path.append(prev[path[-1]])
                            return path
                        nxt.append(j)
            queue = nxt
        return None

    # -- transforms ---------------------------------------------------

    def permute(self, perm: Sequence[int]) -> "MolGraph":
        """Relabel atoms: new index ``perm[i]`` holds old atom ``i``."""
        n = self.n_atoms
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of atom indices")
        new_atoms: list[AtomNode | None] = [None] * n
        for old, new in enumerate(perm):
            new_atoms[new] = self.atoms[old]
        new_bonds = [
            _normalize_bond(perm[b.a], perm[b.b], b.order) for b in self.bonds
        ]
        return MolGraph(tuple(new_atoms), tuple(new_bonds))  # type: ignore[arg-type]

    def subgraph(self, keep: Iterable[int]) -> "MolGraph":
        """Induced subgraph over ``keep``, atoms reindexed in sorted order."""
        order = sorted(set(keep))
        remap = {old: new for new, old in enumerate(order)}
        atoms = tuple(self.atoms[i] for i in order)
        bonds = tuple(
            _normalize_bond(remap[b.a], remap[b.b], b.order)
            for b in self.bonds
            if b.a in remap and b.b in remap
        )
        return MolGraph(atoms, bonds)

    def with_atom(self, idx: int, **changes: object) -> "MolGraph":
        atoms = list(self.atoms)
        atoms[idx] = replace(atoms[idx], **changes)  # type: ignore[arg-type]
        return MolGraph(tuple(atoms), self.bonds)

    def iter_bonds(self) -> Iterator[BondEdge]:
        return iter(self.bonds)


def make_graph(
    atoms: Sequence[AtomNode], bonds: Sequence[tuple[int, int, BondOrder]]
) -> MolGraph:
    """Convenience constructor from (a, b, order) triples."""
    return MolGraph(
        tuple(atoms), tuple(_normalize_bond(a, b, o) for a, b, o in bonds)
    )
