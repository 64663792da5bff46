"""Spectrum serialization: JSON for inspection, binary for bulk runs."""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .ir import GRID_POINTS, GRID_START, GRID_STEP, SpectrumIR
from .ms2 import SpectrumMS2

_MS2_MAGIC = b"CFM1"
_IR_MAGIC = b"CFI1"


def ms2_to_json(s: SpectrumMS2) -> str:
    return json.dumps(
        {
            "peaks": [[round(mz, 6), intensity] for mz, intensity in s.peaks],
            "precursor_mz": round(s.precursor_mz, 6),
        }
    )


def ms2_from_json(text: str) -> SpectrumMS2:
    raw = json.loads(text)
    return SpectrumMS2(
        peaks=tuple((float(mz), float(i)) for mz, i in raw["peaks"]),
        precursor_mz=float(raw["precursor_mz"]),
    )


def ir_to_json(s: SpectrumIR) -> str:
    return json.dumps(
        {
            "grid_start": GRID_START,
            "grid_step": GRID_STEP,
            "intensity": [round(float(v), 6) for v in s.intensity],
        }
    )


def ir_from_json(text: str) -> SpectrumIR:
    raw = json.loads(text)
    if raw.get("grid_start") != GRID_START or raw.get("grid_step") != GRID_STEP:
        raise ValueError("IR grid header does not match the fixed grid")
    return SpectrumIR(np.asarray(raw["intensity"], dtype=np.float64))


def write_ms2_blob(s: SpectrumMS2, path: str | Path) -> None:
    """Binary: magic, peak count, precursor, then float32 LE mz/I pairs."""
    with open(path, "wb") as fh:
        fh.write(_MS2_MAGIC)
        fh.write(struct.pack("<Id", s.n_peaks, s.precursor_mz))
        arr = np.asarray(s.peaks, dtype="<f4")
        fh.write(arr.tobytes())


def read_ms2_blob(path: str | Path) -> tuple[np.ndarray, float]:
    """Return (peaks float32 array of shape (n, 2), precursor_mz)."""
    blob = Path(path).read_bytes()
    if blob[:4] != _MS2_MAGIC:
        raise ValueError(f"{path}: not an MS2 blob")
    n, precursor = struct.unpack_from("<Id", blob, 4)
    peaks = np.frombuffer(blob, dtype="<f4", count=n * 2, offset=16).reshape(n, 2)
    return peaks.copy(), precursor


def write_ir_blob(s: SpectrumIR, path: str | Path) -> None:
    """Binary: magic, grid header, float32 LE intensities."""
    with open(path, "wb") as fh:
        fh.write(_IR_MAGIC)
        fh.write(struct.pack("<ddI", GRID_START, GRID_STEP, GRID_POINTS))
        fh.write(np.asarray(s.intensity, dtype="<f4").tobytes())


def read_ir_blob(path: str | Path) -> np.ndarray:
    blob = Path(path).read_bytes()
    if blob[:4] != _IR_MAGIC:
        raise ValueError(f"{path}: not an IR blob")
    start, step, n = struct.unpack_from("<ddI", blob, 4)
    if (start, step, n) != (GRID_START, GRID_STEP, GRID_POINTS):
        raise ValueError(f"{path}: unexpected IR grid header")
    return np.frombuffer(blob, dtype="<f4", count=n, offset=24).copy()
