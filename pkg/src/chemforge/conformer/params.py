"""Force-field parameters: loading, rest lengths, and angle targets."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..chem.graph import BondOrder, MolGraph

_ORDER_CHAR = {
    BondOrder.SINGLE: "-",
    BondOrder.DOUBLE: "=",
    BondOrder.TRIPLE: "#",
    BondOrder.AROMATIC: ":",
}
_ORDER_FACTOR_KEY = {
    BondOrder.SINGLE: "1",
    BondOrder.DOUBLE: "2",
    BondOrder.TRIPLE: "3",
    BondOrder.AROMATIC: "ar",
}


@dataclass(frozen=True)
class ForceFieldParams:
    """Versioned constants for the heavy-atom potential."""

    version: int
    bond_k: float
    angle_k: float
    repulsion_k: float
    repulsion_sigma: float
    max_iters: int
    step_size: float
    grad_tol: float
    angle_rest_deg: dict[str, float]
    rest_lengths: dict[str, float]
    order_factor: dict[str, float]
    covalent_radius: dict[str, float]
    default_radius: float = 1.1

    def __post_init__(self) -> None:
        for name in ("bond_k", "angle_k", "repulsion_k", "repulsion_sigma",
                     "step_size", "grad_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_iters < 0:
            raise ValueError("max_iters must be non-negative")

    # -- lookups --------------------------------------------------------

    def bond_rest_length(self, sym_a: str, sym_b: str, order: BondOrder) -> float:
        """Rest length in Å for a bond, falling back to covalent radii."""
        lo, hi = sorted((sym_a, sym_b))
        key = f"{lo}{_ORDER_CHAR[order]}{hi}"
        if key in self.rest_lengths:
            return self.rest_lengths[key]
        ra = self.covalent_radius.get(lo, self.default_radius)
        rb = self.covalent_radius.get(hi, self.default_radius)
        return (ra + rb) * self.order_factor[_ORDER_FACTOR_KEY[order]]

    def angle_rest_cos(self, m: MolGraph, center: int) -> float:
        """cos of the target angle at an atom, by hybridization proxy."""
        triple = 0
        double = 0
        for j in m.neighbors(center):
            order = m.bond_order(center, j)
            if order is BondOrder.TRIPLE:
                triple += 1
            elif order is BondOrder.DOUBLE:
                double += 1
        if triple or double >= 2:
            kind = "sp"
        elif double or m.atoms[center].aromatic:
            kind = "sp2"
        else:
            kind = "sp3"
        return math.cos(math.radians(self.angle_rest_deg[kind]))


def load_params(path: str | Path | None = None) -> ForceFieldParams:
    """Read parameters from a JSON file; default is the packaged table."""
    if path is None:
        text = (
            resources.files("chemforge")
            .joinpath("data/forcefield.json")
            .read_text("utf-8")
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    raw = json.loads(text)
    return ForceFieldParams(
        version=int(raw["version"]),
        bond_k=float(raw["bond_k"]),
        angle_k=float(raw["angle_k"]),
        repulsion_k=float(raw["repulsion_k"]),
        repulsion_sigma=float(raw["repulsion_sigma"]),
        max_iters=int(raw["max_iters"]),
        step_size=float(raw["step_size"]),
        grad_tol=float(raw["grad_tol"]),
        angle_rest_deg={k: float(v) for k, v in raw["angle_rest_deg"].items()},
        rest_lengths={k: float(v) for k, v in raw["rest_lengths"].items()},
        order_factor={k: float(v) for k, v in raw["order_factor"].items()},
        covalent_radius={k: float(v) for k, v in raw["covalent_radius"].items()},
        default_radius=float(raw.get("default_radius", 1.1)),
    )


_DEFAULT: ForceFieldParams | None = None


def default_params() -> ForceFieldParams:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_params()
    return _DEFAULT
