"""Molecule parsing, canonicalization, and interrogation."""

from .canon import canonical_rank, canonical_smiles, same_molecule, write_smiles
from .errors import (
    BadBracketAtom,
    MissingSide,
    SmilesError,
    UnbalancedParenthesis,
    UnclosedRing,
    UnknownElement,
    ValenceError,
)
from .formula import (
    heavy_atom_count,
    molecular_formula,
    monoisotopic_mass,
    net_charge,
)
from .graph import AtomNode, BondEdge, BondOrder, MolGraph, make_graph
from .io import bundled_corpus, read_smiles_lines
from .randmol import random_corpus, random_molecule
from .reaction import Reaction
from .smiles import parse_reaction, parse_smiles

__all__ = [
    "AtomNode",
    "BadBracketAtom",
    "BondEdge",
    "BondOrder",
    "MissingSide",
    "MolGraph",
    "Reaction",
    "SmilesError",
    "UnbalancedParenthesis",
    "UnclosedRing",
    "UnknownElement",
    "ValenceError",
    "bundled_corpus",
    "canonical_rank",
    "canonical_smiles",
    "heavy_atom_count",
    "make_graph",
    "molecular_formula",
    "monoisotopic_mass",
    "net_charge",
    "parse_reaction",
    "parse_smiles",
    "random_corpus",
    "random_molecule",
    "read_smiles_lines",
    "same_molecule",
    "write_smiles",
]
