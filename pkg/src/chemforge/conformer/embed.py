"""Distance-geometry initial coordinates.

Bond-graph hop distances scaled to a typical bond length give a crude
metric; classical multidimensional scaling turns that into 3D points,
and a small seeded jitter breaks planar and collinear degeneracies so
relaxation starts from a generic position.  Disconnected components are
embedded separately and laid out along the x axis with a gap.
"""

from __future__ import annotations

import numpy as np

from ..chem.graph import MolGraph
from .types import Conformation

_HOP_SCALE = 1.5
_JITTER = 0.08
_COMPONENT_GAP = 3.0


def _hop_matrix(m: MolGraph, comp: list[int]) -> np.ndarray:
    index = {atom: k for k, atom in enumerate(comp)}
    n = len(comp)
    dist = np.full((n, n), np.inf)
    for k, atom in enumerate(comp):
        dist[k, k] = 0.0
        frontier = [atom]
        seen = {atom}
        hops = 0
        while frontier:
            hops += 1
            nxt = []
            for i in frontier:
                for j in m.neighbors(i):
                    if j not in seen:
                        seen.add(j)
                        dist[k, index[j]] = hops
                        nxt.append(j)
            frontier = nxt
    return dist


def _classical_mds(dist: np.ndarray) -> np.ndarray:
    """Top-3 eigenspace embedding of a squared-distance matrix."""
    n = dist.shape[0]
    if n == 1:
        return np.zeros((1, 3))
    sq = dist**2
    centering = np.eye(n) - np.full((n, n), 1.0 / n)
    gram = -0.5 * centering @ sq @ centering
    vals, vecs = np.linalg.eigh(gram)
    order = np.argsort(vals)[::-1][:3]
    coords = np.zeros((n, 3))
    for axis, idx in enumerate(order):
        lam = max(float(vals[idx]), 0.0)
        coords[:, axis] = vecs[:, idx] * np.sqrt(lam)
    return coords


def embed_conformation(m: MolGraph, seed: int = 0) -> Conformation:
    """Deterministic starting coordinates for one molecule."""
    if m.n_atoms == 0:
        raise ValueError("cannot embed an empty molecule")
    if m.n_atoms == 1:
        return Conformation(m, np.zeros((1, 3)))

    rng = np.random.default_rng(seed)
    coords = np.zeros((m.n_atoms, 3))
    x_shift = 0.0
    for comp in m.components():
        hop = _hop_matrix(m, comp)
        local = _classical_mds(hop * _HOP_SCALE)
        local = local + rng.normal(scale=_JITTER, size=local.shape)
        local[:, 0] += x_shift - float(local[:, 0].min())
        x_shift = float(local[:, 0].max()) + _COMPONENT_GAP
        for k, atom in enumerate(comp):
            coords[atom] = local[k]
    return Conformation(m, coords)
