"""Graph encoder: a 5-layer graph isomorphism network with seeded weights.

The network is untrained but structurally real: per-layer neighbor sums
with bond-type embeddings feed a two-layer MLP, so permutation
equivariance and isomorphism invariance hold by construction and are
exercised for real in tests.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..chem.elements import ATOMIC_NUMBER
from ..chem.graph import BondOrder, MolGraph
from .seeds import gelu, rng_for, seeded_matrix, seeded_vector
from .types import ENCODING_DIMS

GRAPH_DIM = ENCODING_DIMS["graph"]
N_LAYERS = 5
_EPSILON = 0.1  # GIN self-weight: (1 + eps) * h_v + sum of neighbors

_MAX_Z = 118
_CHARGE_OFFSET = 8  # charges -8..+8 get distinct embeddings
_MAX_H = 8


class GraphEncoder:
    """Materialized seeded weights for the 5-layer GIN."""

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed
        d = GRAPH_DIM
        self.atom_embed = rng_for(seed, "graph.atom_embed").normal(
            0.0, 1.0, (_MAX_Z + 1, d)
        )
        self.charge_embed = rng_for(seed, "graph.charge_embed").normal(
            0.0, 0.25, (2 * _CHARGE_OFFSET + 1, d)
        )
        self.h_embed = rng_for(seed, "graph.h_embed").normal(
            0.0, 0.25, (_MAX_H + 1, d)
        )
        self.aromatic_embed = rng_for(seed, "graph.aromatic_embed").normal(
            0.0, 0.25, (2, d)
        )
        self.isotope_embed = rng_for(seed, "graph.isotope_embed").normal(
            0.0, 0.25, (2, d)
        )
        self.bond_embed = {
            order: seeded_vector(seed, f"graph.bond_embed.{order.name}", d)
            for order in BondOrder
        }
        self.layers = []
        for layer in range(N_LAYERS):
            self.layers.append(
                (
                    seeded_matrix(seed, f"graph.layer{layer}.W1", (d, d)),
                    seeded_vector(seed, f"graph.layer{layer}.b1", d) * 0.1,
                    seeded_matrix(seed, f"graph.layer{layer}.W2", (d, d)),
                    seeded_vector(seed, f"graph.layer{layer}.b2", d) * 0.1,
                )
            )

    def _initial_features(self, m: MolGraph) -> np.ndarray:
        rows = np.empty((m.n_atoms, GRAPH_DIM))
        for i, atom in enumerate(m.atoms):
            z = ATOMIC_NUMBER[atom.symbol]
            charge = min(max(atom.charge, -_CHARGE_OFFSET), _CHARGE_OFFSET)
            h = min(atom.h_count, _MAX_H)
            rows[i] = (
                self.atom_embed[z]
                + self.charge_embed[charge + _CHARGE_OFFSET]
                + self.h_embed[h]
                + self.aromatic_embed[1 if atom.aromatic else 0]
                + self.isotope_embed[1 if atom.isotope else 0]
            )
        return rows

    def __call__(self, m: MolGraph) -> np.ndarray:
        h = self._initial_features(m)
        neighbor_lists = [m.neighbors(i) for i in range(m.n_atoms)]
        bond_vecs = {
            (bond.a, bond.b): self.bond_embed[bond.order] for bond in m.bonds
        }
        for W1, b1, W2, b2 in self.layers:
            agg = (1.0 + _EPSILON) * h
            for i, nbs in enumerate(neighbor_lists):
                for j in nbs:
                    key = (i, j) if i < j else (j, i)
                    agg[i] = agg[i] + h[j] + bond_vecs[key]
            h = gelu(agg @ W1 + b1) @ W2 + b2
        return h

    def weight_arrays(self) -> dict[str, np.ndarray]:
        out: dict[str, np.ndarray] = {
            "atom_embed": self.atom_embed,
            "charge_embed": self.charge_embed,
            "h_embed": self.h_embed,
            "aromatic_embed": self.aromatic_embed,
            "isotope_embed": self.isotope_embed,
        }
        for order, vec in self.bond_embed.items():
            out[f"bond_embed.{order.name}"] = vec
        for layer, (W1, b1, W2, b2) in enumerate(self.layers):
            out[f"layer{layer}.W1"] = W1
            out[f"layer{layer}.b1"] = b1
            out[f"layer{layer}.W2"] = W2
            out[f"layer{layer}.b2"] = b2
        return out


@lru_cache(maxsize=4)
def _cached_encoder(seed: int) -> GraphEncoder:
    return GraphEncoder(seed)


def encode_graph(m: MolGraph, seed: int = 0) -> np.ndarray:
    """One 300-wide embedding row per heavy atom."""
    return _cached_encoder(seed)(m)
