"""Pure numpy force-field kernel.

Same contract as the compiled kernel: given coordinates and flattened
term arrays, return total energy and the per-atom gradient.  Selected at
import time when the compiled extension is unavailable or disabled.
"""

from __future__ import annotations

import numpy as np


def energy_gradient(
    coords: np.ndarray,
    bond_a: np.ndarray,
    bond_b: np.ndarray,
    bond_rest: np.ndarray,
    bond_k: float,
    angle_left: np.ndarray,
    angle_center: np.ndarray,
    angle_right: np.ndarray,
    angle_cos0: np.ndarray,
    angle_k: float,
    pair_a: np.ndarray,
    pair_b: np.ndarray,
    sigma: float,
    repulsion_k: float,
) -> tuple[float, np.ndarray]:
    grad = np.zeros_like(coords)
    energy = 0.0

    if len(bond_a):
        delta = coords[bond_a] - coords[bond_b]
        dist = np.sqrt((delta**2).sum(axis=1))
        stretch = dist - bond_rest
        energy += float(bond_k * (stretch**2).sum())
        # dE/dx_a = 2k (d - r0) * (x_a - x_b) / d
        coeff = (2.0 * bond_k * stretch / dist)[:, None]
        np.add.at(grad, bond_a, coeff * delta)
        np.add.at(grad, bond_b, -coeff * delta)

    if len(angle_left):
        u = coords[angle_left] - coords[angle_center]
        v = coords[angle_right] - coords[angle_center]
        nu = np.sqrt((u**2).sum(axis=1))
        nv = np.sqrt((v**2).sum(axis=1))
        dot = (u * v).sum(axis=1)
        cos = dot / (nu * nv)
        diff = cos - angle_cos0
        energy += float(angle_k * (diff**2).sum())
        pref = 2.0 * angle_k * diff
        dcos_du = v / (nu * nv)[:, None] - (cos / nu**2)[:, None] * u
        dcos_dv = u / (nu * nv)[:, None] - (cos / nv**2)[:, None] * v
        np.add.at(grad, angle_left, pref[:, None] * dcos_du)
        np.add.at(grad, angle_right, pref[:, None] * dcos_dv)
        np.add.at(grad, angle_center, -pref[:, None] * (dcos_du + dcos_dv))

    if len(pair_a):
        delta = coords[pair_a] - coords[pair_b]
        dist = np.sqrt((delta**2).sum(axis=1))
        inside = dist < sigma
        if inside.any():
            d = dist[inside]
            gap = 1.0 - d / sigma
            energy += float(repulsion_k * (gap**2).sum())
            # dE/dd = -2k (1 - d/sigma) / sigma
            coeff = (-2.0 * repulsion_k * gap / sigma / d)[:, None]
            ia = pair_a[inside]
            ib = pair_b[inside]
            np.add.at(grad, ia, coeff * delta[inside])
            np.add.at(grad, ib, -coeff * delta[inside])

    return energy, grad
