"""Seeded random molecule generator.

Builds MolGraph objects directly (never via SMILES text), so generated
structures exercise the parser and writer from an independent direction.
Used to produce the bundled round-trip corpus and randomized test inputs.

Run as a module to regenerate a corpus file:

    python -m chemforge.chem.randmol --count 1000 --seed 7 --out corpus.smi
"""

from __future__ import annotations

import argparse
import random
from collections import deque

from .canon import write_smiles
from .elements import DEFAULT_VALENCES
from .graph import AtomNode, BondEdge, BondOrder, MolGraph
from .smiles import implicit_hydrogens

_ELEMENT_WEIGHTS = (
    ("C", 0.68),
    ("O", 0.12),
    ("N", 0.10),
    ("S", 0.03),
    ("F", 0.03),
    ("Cl", 0.02),
    ("Br", 0.01),
    ("P", 0.01),
)

_SIZE_CHOICES = tuple(range(1, 19))
_SIZE_WEIGHTS = (1, 2, 3, 5, 7, 9, 10, 10, 10, 9, 8, 7, 6, 4, 3, 2, 1, 1)


class _Builder:
    def __init__(self, rng: random.Random) -> None:
        self.rng = rng
        self.symbols: list[str] = []
        self.aromatic: list[bool] = []
        self.cap: list[float] = []
        self.used: list[float] = []
        self.forced_h: dict[int, int] = {}
        self.bonds: dict[tuple[int, int], BondOrder] = {}

    def add_atom(self, symbol: str, aromatic: bool = False, cap: float = 0.0) -> int:
        self.symbols.append(symbol)
        self.aromatic.append(aromatic)
        self.cap.append(cap)
        self.used.append(0.0)
        return len(self.symbols) - 1

    def add_bond(self, a: int, b: int, order: BondOrder) -> None:
        key = (a, b) if a < b else (b, a)
        self.bonds[key] = order
        weight = 1.0 if order is BondOrder.AROMATIC else float(order.value)
        self.used[a] += weight
        self.used[b] += weight

    def free(self, i: int) -> float:
        return self.cap[i] - self.used[i]

    def bonded(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        return key in self.bonds

    def distance(self, a: int, b: int) -> int:
        seen = {a: 0}
        queue = deque([a])
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.symbols))}
        for (x, y) in self.bonds:
            adj[x].append(y)
            adj[y].append(x)
        while queue:
            i = queue.popleft()
            if i == b:
                return seen[i]
            for j in adj[i]:
                if j not in seen:
                    seen[j] = seen[i] + 1
                    queue.append(j)
        return -1


def _growth_cap(rng: random.Random, symbol: str) -> float:
    # Mostly the lowest allowed valence; S and P occasionally hypervalent.
    low = DEFAULT_VALENCES[symbol][0]
    if symbol in ("S", "P") and rng.random() < 0.1:
        return float(DEFAULT_VALENCES[symbol][-1])
    return float(low)


def _plant_aromatic_ring(b: _Builder, rng: random.Random, size: int) -> None:
    if size == 6:
        symbols = ["C"] * 6
        if rng.random() < 0.3:
            symbols[0] = "N"
    else:
        symbols = ["C"] * 5
        hetero = rng.choice(["O", "S", "N"])
        symbols[0] = hetero
    first = len(b.symbols)
    for k, sym in enumerate(symbols):
        # Ring atom capacity: 2 ring bonds + pi duty; what is left for
        # substituents is max valence - ring share.
        if sym == "C":
            cap = 4.0
        elif sym == "N" and size == 6:
            cap = 3.0
        else:
            cap = 2.0 if sym in ("O", "S") else 3.0
        b.add_atom(sym, aromatic=True, cap=cap)
        if sym == "N" and size == 5:
            # Pyrrole-type N keeps its hydrogen; no substituent room.
            b.forced_h[first + k] = 1
    for k in range(len(symbols)):
        a = first + k
        c = first + (k + 1) % len(symbols)
        b.add_bond(a, c, BondOrder.AROMATIC)
    # Pi electron duty: aromatic C and pyridine-type N spend one extra
    # unit of valence; the reserved pyrrole H does the same.
    for k, sym in enumerate(symbols):
        idx = first + k
        if sym == "C" or (sym == "N" and size == 6):
            b.used[idx] += 1.0
        if idx in b.forced_h:
            b.used[idx] += float(b.forced_h[idx])


def random_molecule(
    rng: random.Random,
    n_heavy: int | None = None,
    allow_charge: bool = True,
    allow_isotope: bool = True,
) -> MolGraph:
    """One random, valence-consistent molecule."""
    if n_heavy is None:
        n_heavy = rng.choices(_SIZE_CHOICES, weights=_SIZE_WEIGHTS, k=1)[0]
    b = _Builder(rng)

    if n_heavy >= 6 and rng.random() < 0.35:
        _plant_aromatic_ring(b, rng, 6)
    elif n_heavy >= 5 and rng.random() < 0.30:
        _plant_aromatic_ring(b, rng, 5)

    while len(b.symbols) < n_heavy:
        symbol = rng.choices(
            [s for s, _ in _ELEMENT_WEIGHTS],
            weights=[w for _, w in _ELEMENT_WEIGHTS],
            k=1,
        )[0]
        cap = _growth_cap(rng, symbol)
        idx = b.add_atom(symbol, cap=cap)
        if idx == 0:
            continue
        hosts = [i for i in range(idx) if b.free(i) >= 1.0]
        if not hosts:
            # Nothing can take another neighbor; shrink the molecule.
            b.symbols.pop()
            b.aromatic.pop()
            b.cap.pop()
            b.used.pop()
            break
        host = rng.choice(hosts)
        order = BondOrder.SINGLE
        roll = rng.random()
        if (
            roll < 0.12
            and b.free(host) >= 2.0
            and cap >= 2.0
            and not b.aromatic[host]
        ):
            order = BondOrder.DOUBLE
        elif (
            roll < 0.15
            and b.free(host) >= 3.0
            and cap >= 3.0
            and b.symbols[idx] in ("C", "N")
            and b.symbols[host] in ("C", "N")
            and not b.aromatic[host]
        ):
            order = BondOrder.TRIPLE
        b.add_bond(host, idx, order)

    # Optional extra ring closures between distant atoms with spare valence.
    n = len(b.symbols)
    if n >= 4:
        for _ in range(2):
            if rng.random() > 0.25:
                continue
            spots = [i for i in range(n) if b.free(i) >= 1.0]
            rng.shuffle(spots)
            done = False
            for a in spots:
                for c in spots:
                    if c <= a or b.bonded(a, c):
                        continue
                    if b.distance(a, c) >= 2:
                        b.add_bond(a, c, BondOrder.SINGLE)
                        done = True
                        break
                if done:
                    break

    n = len(b.symbols)
    charges = [0] * n
    h_counts = [0] * n
    isotopes = [0] * n

    if allow_charge and rng.random() < 0.05:
        cations = [
            i
            for i in range(n)
            if b.symbols[i] == "N" and not b.aromatic[i] and b.used[i] <= 3.0
        ]
        anions = [
            i for i in range(n) if b.symbols[i] == "O" and b.used[i] <= 1.0
        ]
        if cations and (not anions or rng.random() < 0.5):
            i = rng.choice(cations)
            charges[i] = 1
            h_counts[i] = int(4 - b.used[i])
        elif anions:
            i = rng.choice(anions)
            charges[i] = -1
            h_counts[i] = int(1 - b.used[i])

    if allow_isotope and rng.random() < 0.04:
        marks = [i for i in range(n) if b.symbols[i] in ("C", "N")]
        if marks:
            i = rng.choice(marks)
            isotopes[i] = 13 if b.symbols[i] == "C" else 15

    atoms = []
    for i in range(n):
        if charges[i] == 0:
            if i in b.forced_h:
                h = b.forced_h[i]
            else:
                bond_sum = sum(
                    1.0 if o is BondOrder.AROMATIC else float(o.value)
                    for (x, y), o in b.bonds.items()
                    if i in (x, y)
                )
                h = implicit_hydrogens(b.symbols[i], b.aromatic[i], bond_sum)
                if h is None:
                    h = 0
            h_counts[i] = h
        atoms.append(
            AtomNode(
                symbol=b.symbols[i],
                charge=charges[i],
                h_count=h_counts[i],
                aromatic=b.aromatic[i],
                isotope=isotopes[i],
            )
        )
    bonds = tuple(BondEdge(a, c, o) for (a, c), o in sorted(b.bonds.items()))
    return MolGraph(tuple(atoms), bonds)


def random_corpus(count: int, seed: int) -> list[str]:
    """Non-canonical SMILES spellings of ``count`` random molecules."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        mol = random_molecule(rng)
        out.append(write_smiles(mol, canonical=False))
    return out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", required=True)
    args = parser.parse_args(argv)
    lines = random_corpus(args.count, args.seed)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} molecules to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
