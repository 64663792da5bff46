"""Reaction container: reactants, agents, products."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import MolGraph


@dataclass(frozen=True)
class Reaction:
    """A chemical reaction as three molecule lists.

    Reactants and products must be non-empty; agents (catalysts,
    solvents) may be empty.
    """

    reactants: tuple[MolGraph, ...]
    agents: tuple[MolGraph, ...] = field(default=())
    products: tuple[MolGraph, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.reactants:
            raise ValueError("reaction needs at least one reactant")
        if not self.products:
            raise ValueError("reaction needs at least one product")

    @property
    def roles(self) -> tuple[str, ...]:
        """Mask-eligible roles, in fixed order."""
        if self.agents:
            return ("reactant", "agent", "product")
        return ("reactant", "product")

    def molecules(self, role: str) -> tuple[MolGraph, ...]:
        if role == "reactant":
            return self.reactants
        if role == "agent":
            return self.agents
        if role == "product":
            return self.products
        raise ValueError(f"unknown reaction role {role!r}")

    def all_molecules(self) -> tuple[MolGraph, ...]:
        return self.reactants + self.agents + self.products
