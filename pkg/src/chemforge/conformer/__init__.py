"""Pseudo-optimal 3D conformations from molecular graphs."""

from .embed import embed_conformation
from .forcefield import (
    KERNEL_NAME,
    gradient,
    make_conformation,
    potential_energy,
    relax,
)
from .io import read_blob, to_json, write_blob
from .params import ForceFieldParams, default_params, load_params
from .topology import FFTopology, build_topology
from .types import Conformation, NumericalBlowup

__all__ = [
    "Conformation",
    "FFTopology",
    "ForceFieldParams",
    "KERNEL_NAME",
    "NumericalBlowup",
    "build_topology",
    "default_params",
    "embed_conformation",
    "gradient",
    "load_params",
    "make_conformation",
    "potential_energy",
    "read_blob",
    "relax",
    "to_json",
    "write_blob",
]
