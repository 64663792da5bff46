"""Deterministic 2D coordinate assignment for molecular drawings.

Bond lengths come out at roughly one layout unit.  Isolated rings are
placed on exact regular polygons; chains follow the standard zig-zag
sketch with bond directions alternating +/-30 degrees off the horizontal
axis.  Fused rings share an edge and are reflected to the free side.
The result depends only on the graph, so repeated calls are identical.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from ..chem.graph import BondOrder, MolGraph

#: Gap between the bounding boxes of disconnected components, in bond units.
COMPONENT_GAP = 1.5

_DEG = math.pi / 180.0


def _unit(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def _angle_of(vec: np.ndarray) -> float:
    return math.atan2(float(vec[1]), float(vec[0]))


def _angular_gap(a: float, b: float) -> float:
    """Smallest absolute difference between two angles."""
    d = (a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


class _Layout:
    def __init__(self, m: MolGraph) -> None:
        self.m = m
        self.coords = np.zeros((m.n_atoms, 2))
        self.placed = [False] * m.n_atoms
        self.rings = m.sssr_like_rings()
        self.ring_done = [False] * len(self.rings)
        # bond (lo, hi) -> indexes of rings that contain it
        self.bond_rings: dict[tuple[int, int], list[int]] = {}
        for idx, ring in enumerate(self.rings):
            k = len(ring)
            for j in range(k):
                a, b = ring[j], ring[(j + 1) % k]
                key = (min(a, b), max(a, b))
                self.bond_rings.setdefault(key, []).append(idx)
        self.in_angle: dict[int, float] = {}
        self.parity: dict[int, int] = {}

    # -- ring polygon placement ------------------------------------------

    def _set_polygon(
        self,
        ring: list[int],
        center: np.ndarray,
        phi0: float,
        direction: int,
        start: int,
    ) -> list[int]:
        """Place ring vertices on the circle; return newly placed atoms."""
        k = len(ring)
        radius = 0.5 / math.sin(math.pi / k)
        new_atoms = []
        for j in range(k):
            atom = ring[(start + j) % k]
            if self.placed[atom]:
                continue
            angle = phi0 + direction * 2 * math.pi * j / k
            self.coords[atom] = center + radius * _unit(angle)
            self.placed[atom] = True
            new_atoms.append(atom)
        return new_atoms

    def _radial_state(self, atoms: list[int], center: np.ndarray) -> None:
        """Substituents sprout radially outward from ring atoms."""
        for atom in atoms:
            self.in_angle[atom] = _angle_of(self.coords[atom] - center)
            self.parity[atom] = 1

    def _place_ring(self, ring_idx: int, anchor: int) -> list[int] | None:
        """Try to place one ring anchored at already-placed atoms.

        Returns the newly placed atoms, or None when the anchoring is too
        constrained for a clean polygon (caller falls back to open-chain
        placement for the blocked neighbor).
        """
        ring = self.rings[ring_idx]
        k = len(ring)
        placed_members = [a for a in ring if self.placed[a]]
        radius = 0.5 / math.sin(math.pi / k)
        apothem = 0.5 / math.tan(math.pi / k)

        if len(placed_members) == 1:
            atom = placed_members[0]
            pos = self.coords[atom]
            # Grow away from every placed neighbor of the anchor atom.
            away = np.zeros(2)
            for nb in self.m.neighbors(atom):
                if self.placed[nb]:
                    delta = pos - self.coords[nb]
                    norm = float(np.hypot(*delta))
                    if norm > 1e-9:
                        away += delta / norm
            if float(np.hypot(*away)) < 1e-9:
                away = _unit(30 * _DEG)
            away /= float(np.hypot(*away))
            center = pos + radius * away
            phi0 = _angle_of(pos - center)
            new_atoms = self._set_polygon(ring, center, phi0, 1, ring.index(atom))
            self._radial_state(new_atoms, center)
            self.ring_done[ring_idx] = True
            return new_atoms

        if len(placed_members) == 2:
            a, b = placed_members
            ia, ib = ring.index(a), ring.index(b)
            step = (ib - ia) % k
            if step not in (1, k - 1):
                return None  # placed atoms are not an edge of this ring
            pa, pb = self.coords[a], self.coords[b]
            edge = pb - pa
            edge_len = float(np.hypot(*edge))
            if edge_len < 1e-9:
                return None
            normal = np.array([-edge[1], edge[0]]) / edge_len
            mid = (pa + pb) / 2
            # Choose the side away from whatever is already drawn nearby.
            crowd = []
            for member in (a, b):
                for nb in self.m.neighbors(member):
                    if self.placed[nb] and nb not in (a, b):
                        crowd.append(self.coords[nb])
            if crowd:
                bias = np.mean(np.array(crowd), axis=0) - mid
                side = -1.0 if float(bias @ normal) > 0 else 1.0
            else:
                side = 1.0
            center = mid + side * apothem * normal
            phi0 = _angle_of(pa - center)
            target = _angle_of(pb - center)
            want = 2 * math.pi * step / k
            err_fwd = _angular_gap(phi0 + want, target)
            err_rev = _angular_gap(phi0 - want, target)
            direction = 1 if err_fwd <= err_rev else -1
            new_atoms = self._set_polygon(ring, center, phi0, direction, ia)
            self._radial_state(new_atoms, center)
            self.ring_done[ring_idx] = True
            return new_atoms

        return None  # bridged / mostly-placed rings fall back to chains

    # -- open-chain placement --------------------------------------------

    def _is_linear(self, a: int, b: int) -> bool:
        if self.m.bond_order(a, b) is BondOrder.TRIPLE:
            return True
        return any(
            self.m.bond_order(a, nb) is BondOrder.TRIPLE
            for nb in self.m.neighbors(a)
            if nb != b
        )

    def _pick_angle(self, a: int, b: int) -> float:
        base = self.in_angle.get(a)
        p = self.parity.get(a, 1)
        if base is None:
            candidates = [angle * _DEG for angle in (30, 150, 270, 90, 210, 330)]
        elif self._is_linear(a, b):
            candidates = [base, base + p * 60 * _DEG, base - p * 60 * _DEG]
        else:
            candidates = [
                base + p * 60 * _DEG,
                base - p * 60 * _DEG,
                base + p * 120 * _DEG,
                base - p * 120 * _DEG,
                base,
                base + math.pi,
            ]
        used = [
            _angle_of(self.coords[nb] - self.coords[a])
            for nb in self.m.neighbors(a)
            if self.placed[nb]
        ]
        best, best_gap = candidates[0], -1.0
        for cand in candidates:
            gap = min((_angular_gap(cand, u) for u in used), default=math.pi)
            if gap >= 45 * _DEG:
                return cand
            if gap > best_gap:
                best, best_gap = cand, gap
        return best

    def _place_chain_atom(self, a: int, b: int) -> None:
        angle = self._pick_angle(a, b)
        self.coords[b] = self.coords[a] + _unit(angle)
        self.placed[b] = True
        self.in_angle[b] = angle
        self.parity[b] = -self.parity.get(a, 1)

    # -- component traversal ---------------------------------------------

    def _pending_ring(self, a: int, b: int) -> int | None:
        for ring_idx in self.bond_rings.get((min(a, b), max(a, b)), ()):
            if not self.ring_done[ring_idx]:
                return ring_idx
        return None

    def run_component(self, atoms: list[int]) -> None:
        start = min(atoms)
        queue: deque[int] = deque()
        start_ring = next(
            (
                idx
                for idx, ring in enumerate(self.rings)
                if start in ring and not self.ring_done[idx]
            ),
            None,
        )
        if start_ring is not None:
            ring = self.rings[start_ring]
            k = len(ring)
            radius = 0.5 / math.sin(math.pi / k)
            center = np.array([0.0, radius])
            new_atoms = self._set_polygon(
                ring, center, -math.pi / 2, 1, ring.index(start)
            )
            self._radial_state(new_atoms, center)
            self.ring_done[start_ring] = True
            queue.extend(new_atoms)
        else:
            self.placed[start] = True
            self.parity[start] = 1
            queue.append(start)

        while queue:
            a = queue.popleft()
            for b in sorted(self.m.neighbors(a)):
                if self.placed[b]:
                    continue
                ring_idx = self._pending_ring(a, b)
                if ring_idx is not None:
                    new_atoms = self._place_ring(ring_idx, a)
                    if new_atoms is not None:
                        queue.extend(new_atoms)
                        continue
                self._place_chain_atom(a, b)
                queue.append(b)


def layout_2d(m: MolGraph) -> np.ndarray:
    """Assign deterministic 2D coordinates, one row per atom.

    Disconnected components are packed left to right with a fixed gap.
    A single atom sits exactly at the origin.
    """
    engine = _Layout(m)
    cursor = 0.0
    for component in m.components():
        engine.run_component(component)
        block = engine.coords[component]
        min_x = float(block[:, 0].min())
        mid_y = float((block[:, 1].min() + block[:, 1].max()) / 2)
        block = block + np.array([cursor - min_x, -mid_y])
        engine.coords[component] = block
        cursor = float(block[:, 0].max()) + COMPONENT_GAP
    return engine.coords
