"""MS2 and IR spectrum simulation and tokenization."""

from .ir import (
    GRID_POINTS,
    GRID_START,
    GRID_STEP,
    GROUP_WAVENUMBERS,
    N_TOKENS,
    SpectrumIR,
    detect_groups,
    simulate_ir,
    tokenize_ir,
    untokenize_ir,
)
from .io import (
    ir_from_json,
    ir_to_json,
    ms2_from_json,
    ms2_to_json,
    read_ir_blob,
    read_ms2_blob,
    write_ir_blob,
    write_ms2_blob,
)
from .ms2 import MS2Codebook, SpectrumMS2, simulate_ms2, tokenize_ms2

__all__ = [
    "GRID_POINTS",
    "GRID_START",
    "GRID_STEP",
    "GROUP_WAVENUMBERS",
    "MS2Codebook",
    "N_TOKENS",
    "SpectrumIR",
    "SpectrumMS2",
    "detect_groups",
    "ir_from_json",
    "ir_to_json",
    "ms2_from_json",
    "ms2_to_json",
    "read_ir_blob",
    "read_ms2_blob",
    "simulate_ir",
    "simulate_ms2",
    "tokenize_ir",
    "tokenize_ms2",
    "untokenize_ir",
    "write_ir_blob",
    "write_ms2_blob",
]
