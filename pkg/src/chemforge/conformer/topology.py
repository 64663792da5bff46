"""Flattened force-field terms for a molecule, ready for the kernels."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..chem.graph import MolGraph
from .params import ForceFieldParams


@dataclass(frozen=True, eq=False)
class FFTopology:
    """Index arrays naming every energy term of one molecule.

    Bonds: (bond_a[t], bond_b[t]) stretched toward bond_rest[t].
    Angles: angle_left[t] - angle_center[t] - angle_right[t] bent toward
    arccos(angle_cos0[t]).  Pairs: non-bonded atom pairs subject to the
    soft repulsion; 1-2 and 1-3 neighbors are excluded.
    """

    bond_a: np.ndarray
    bond_b: np.ndarray
    bond_rest: np.ndarray
    angle_left: np.ndarray
    angle_center: np.ndarray
    angle_right: np.ndarray
    angle_cos0: np.ndarray
    pair_a: np.ndarray
    pair_b: np.ndarray


def build_topology(m: MolGraph, params: ForceFieldParams) -> FFTopology:
    bond_a = []
    bond_b = []
    bond_rest = []
    for bond in m.bonds:
        bond_a.append(bond.a)
        bond_b.append(bond.b)
        bond_rest.append(
            params.bond_rest_length(
                m.atoms[bond.a].symbol, m.atoms[bond.b].symbol, bond.order
            )
        )

    angle_left = []
    angle_center = []
    angle_right = []
    angle_cos0 = []
    for center in range(m.n_atoms):
        nbrs = m.neighbors(center)
        if len(nbrs) < 2:
            continue
        cos0 = params.angle_rest_cos(m, center)
        for i, k in combinations(nbrs, 2):
            angle_left.append(i)
            angle_center.append(center)
            angle_right.append(k)
            angle_cos0.append(cos0)

    excluded: set[tuple[int, int]] = set()
    for bond in m.bonds:
        excluded.add((bond.a, bond.b))
    for center in range(m.n_atoms):
        for i, k in combinations(m.neighbors(center), 2):
            excluded.add((i, k) if i < k else (k, i))
    pair_a = []
    pair_b = []
    for i in range(m.n_atoms):
        for j in range(i + 1, m.n_atoms):
            if (i, j) not in excluded:
                pair_a.append(i)
                pair_b.append(j)

    as_i32 = lambda xs: np.asarray(xs, dtype=np.int32)
    as_f64 = lambda xs: np.asarray(xs, dtype=np.float64)
    return FFTopology(
        bond_a=as_i32(bond_a),
        bond_b=as_i32(bond_b),
        bond_rest=as_f64(bond_rest),
        angle_left=as_i32(angle_left),
        angle_center=as_i32(angle_center),
        angle_right=as_i32(angle_right),
        angle_cos0=as_f64(angle_cos0),
        pair_a=as_i32(pair_a),
        pair_b=as_i32(pair_b),
    )
