"""Canonical atom ranking and SMILES writing.

Ranking is iterative partition refinement seeded with per-atom invariants
(element, charge, degree, hydrogen count, aromaticity, isotope) and
refined on sorted neighbor (bond order, rank) multisets.  Remaining ties
are broken by forcing the lowest-index member of the first tied class to
a unique rank and re-refining, repeated until every atom is distinct.

The writer emits a depth-first string over those ranks, so isomorphic
graphs produce byte-identical output.  A non-canonical mode preserves
input atom order instead, which is useful for generating varied spellings
of the same molecule.
"""

from __future__ import annotations

import heapq
from collections import Counter

from .elements import AROMATIC_SUBSET, ORGANIC_SUBSET
from .graph import BondOrder, MolGraph
from .smiles import implicit_hydrogens

_BOND_TEXT = {
    BondOrder.SINGLE: "",
    BondOrder.DOUBLE: "=",
    BondOrder.TRIPLE: "#",
    BondOrder.AROMATIC: "",
}


def _dense(keys: list) -> list[int]:
    """Map keys to dense ranks 0..k-1 preserving sort order."""
    position = {key: pos for pos, key in enumerate(sorted(set(keys)))}
    return [position[key] for key in keys]


def _refine(m: MolGraph, ranks: list[int]) -> list[int]:
    while True:
        keys = []
        for i in range(m.n_atoms):
            nbr = tuple(
                sorted((m.bond_order(i, j).value, ranks[j]) for j in m.neighbors(i))
            )
            keys.append((ranks[i], nbr))
        new = _dense(keys)
        if new == ranks:
            return ranks
        ranks = new


def canonical_rank(m: MolGraph) -> tuple[int, ...]:
    """Permutation-invariant atom ranks, one distinct rank per atom."""
    n = m.n_atoms
    if n == 0:
        return ()
    keys0 = [
        (a.symbol, a.charge, m.degree(i), a.h_count, a.aromatic, a.isotope)
        for i, a in enumerate(m.atoms)
    ]
    ranks = _refine(m, _dense(keys0))
    while True:
        counts = Counter(ranks)
        tied = min((r for r, c in counts.items() if c > 1), default=None)
        if tied is None:
            return tuple(ranks)
        i = ranks.index(tied)
        keys = [(r, 1) for r in ranks]
        keys[i] = (tied, 0)
        ranks = _refine(m, _dense(keys))


def _bare_hydrogens(m: MolGraph, idx: int) -> int | None:
    """H count the reader would assign to this atom written bare."""
    atom = m.atoms[idx]
    used = 0.0
    for j in m.neighbors(idx):
        order = m.bond_order(idx, j)
        used += 1.0 if order is BondOrder.AROMATIC else float(order.value)
    return implicit_hydrogens(atom.symbol, atom.aromatic, used)


def _atom_token(m: MolGraph, idx: int) -> str:
    atom = m.atoms[idx]
    lower_ok = atom.symbol.upper() in {s.upper() for s in AROMATIC_SUBSET} or (
        atom.symbol in ("Se", "As")
    )
    if (
        atom.charge == 0
        and atom.isotope == 0
        and atom.symbol in ORGANIC_SUBSET
        and (not atom.aromatic or lower_ok)
        and _bare_hydrogens(m, idx) == atom.h_count
    ):
        return atom.symbol.lower() if atom.aromatic else atom.symbol

    if atom.aromatic:
        if not lower_ok:
            raise ValueError(
                f"aromatic {atom.symbol} has no lowercase bracket spelling"
            )
        sym = atom.symbol.lower()
    else:
        sym = atom.symbol
    iso = str(atom.isotope) if atom.isotope else ""
    if atom.h_count == 0:
        h = ""
    elif atom.h_count == 1:
        h = "H"
    else:
        h = f"H{atom.h_count}"
    q = atom.charge
    if q == 0:
        charge = ""
    elif q == 1:
        charge = "+"
    elif q == -1:
        charge = "-"
    else:
        charge = f"+{q}" if q > 0 else str(q)
    return f"[{iso}{sym}{h}{charge}]"


def _bond_token(m: MolGraph, a: int, b: int) -> str:
    order = m.bond_order(a, b)
    if order is BondOrder.SINGLE:
        # A plain single bond between two aromatic atoms must be written
        # out, or re-parsing would default it to aromatic.
        if m.atoms[a].aromatic and m.atoms[b].aromatic:
            return "-"
        return ""
    return _BOND_TEXT[order]


def _ring_digit(number: int) -> str:
    if number <= 9:
        return str(number)
    if number <= 99:
        return f"%{number:02d}"
    raise ValueError("more than 99 simultaneous ring closures")


def _write_component(m: MolGraph, ranks: list[int], comp: list[int]) -> str:
    root = min(comp, key=lambda i: ranks[i])

    # First pass: depth-first spanning tree with rank-ordered children,
    # collecting back edges as (opening atom, closing atom) pairs.
    pre: dict[int, int] = {root: 0}
    children: dict[int, list[int]] = {i: [] for i in comp}
    back_edges: set[tuple[int, int]] = set()
    opens: dict[int, list[int]] = {i: [] for i in comp}
    closes: dict[int, list[int]] = {i: [] for i in comp}

    def nbrs(u: int):
        return iter(sorted(m.neighbors(u), key=lambda v: ranks[v]))

    stack: list[tuple[int, int]] = [(root, -1)]
    iters = {root: nbrs(root)}
    while stack:
        u, parent = stack[-1]
        advanced = False
        for v in iters[u]:
            if v not in pre:
                pre[v] = len(pre)
                children[u].append(v)
                iters[v] = nbrs(v)
                stack.append((v, u))
                advanced = True
                break
            if v == parent:
                continue
            key = (u, v) if u < v else (v, u)
            if key not in back_edges:
                back_edges.add(key)
                opener, closer = (v, u) if pre[v] < pre[u] else (u, v)
                opens[opener].append(closer)
                closes[closer].append(opener)
        if not advanced:
            stack.pop()

    for u in comp:
        opens[u].sort(key=lambda w: pre[w])
        closes[u].sort(key=lambda w: pre[w])

    # Second pass: emit tokens, assigning ring-closure numbers in output
    # order and recycling them once closed.
    out: list[str] = []
    free: list[int] = []
    next_number = 1
    edge_number: dict[tuple[int, int], int] = {}
    work: list[tuple[str, object]] = [("atom", root)]
    while work:
        kind, payload = work.pop()
        if kind == "text":
            out.append(payload)  # type: ignore[arg-type]
            continue
        u = payload  # type: ignore[assignment]
        out.append(_atom_token(m, u))
        for w in closes[u]:
            key = (u, w) if u < w else (w, u)
            number = edge_number.pop(key)
            heapq.heappush(free, number)
            out.append(_bond_token(m, u, w) + _ring_digit(number))
        for w in opens[u]:
            key = (u, w) if u < w else (w, u)
            number = heapq.heappop(free) if free else next_number
            if number == next_number:
                next_number += 1
            edge_number[key] = number
            out.append(_bond_token(m, u, w) + _ring_digit(number))
        kids = children[u]
        parts: list[tuple[str, object]] = []
        for v in kids[:-1]:
            parts.append(("text", "(" + _bond_token(m, u, v)))
            parts.append(("atom", v))
            parts.append(("text", ")"))
        if kids:
            last = kids[-1]
            parts.append(("text", _bond_token(m, u, last)))
            parts.append(("atom", last))
        work.extend(reversed(parts))
    return "".join(out)


def write_smiles(m: MolGraph, canonical: bool = True) -> str:
    """Serialize a MolGraph to a SMILES string.

    With ``canonical=True`` atom order follows canonical ranks and the
    connected components are sorted, so isomorphic inputs give identical
    bytes.  With ``canonical=False`` the input atom order drives the walk,
    producing a valid but order-dependent spelling.
    """
    if m.n_atoms == 0:
        return ""
    ranks = list(canonical_rank(m)) if canonical else list(range(m.n_atoms))
    pieces = [_write_component(m, ranks, comp) for comp in m.components()]
    if canonical:
        pieces.sort()
    return ".".join(pieces)


def canonical_smiles(text_or_graph: str | MolGraph) -> str:
    """Canonical SMILES of a molecule given as string or graph."""
    if isinstance(text_or_graph, str):
        from .smiles import parse_smiles

        graph = parse_smiles(text_or_graph)
    else:
        graph = text_or_graph
    return write_smiles(graph, canonical=True)


def same_molecule(a: str | MolGraph, b: str | MolGraph) -> bool:
    """True when both inputs canonicalize to the same SMILES."""
    return canonical_smiles(a) == canonical_smiles(b)
