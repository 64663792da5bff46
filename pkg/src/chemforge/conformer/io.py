"""Conformation serialization: compact blob and debug JSON."""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .types import Conformation

_MAGIC = b"CFC1"


def write_blob(c: Conformation, path: str | Path) -> None:
    """Binary layout: magic, atom count, element list, little-endian
    float64 coordinate triples, energy, converged flag."""
    symbols = ";".join(a.symbol for a in c.graph.atoms).encode("utf-8")
    coords = np.ascontiguousarray(c.coords, dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<I", c.graph.n_atoms))
        fh.write(struct.pack("<I", len(symbols)))
        fh.write(symbols)
        fh.write(coords.tobytes())
        fh.write(struct.pack("<d?", float(c.energy), bool(c.converged)))


def read_blob(path: str | Path) -> tuple[list[str], np.ndarray, float, bool]:
    """Return (element symbols, coords, energy, converged)."""
    blob = Path(path).read_bytes()
    if blob[:4] != _MAGIC:
        raise ValueError(f"{path}: not a conformation blob")
    n = struct.unpack_from("<I", blob, 4)[0]
    slen = struct.unpack_from("<I", blob, 8)[0]
    symbols = blob[12 : 12 + slen].decode("utf-8").split(";") if slen else []
    off = 12 + slen
    coords = np.frombuffer(blob, dtype="<f8", count=n * 3, offset=off).reshape(n, 3)
    off += n * 3 * 8
    energy, converged = struct.unpack_from("<d?", blob, off)
    if len(symbols) != n:
        raise ValueError(f"{path}: element list length {len(symbols)} != {n}")
    return symbols, coords.copy(), energy, converged


def to_json(c: Conformation) -> str:
    payload = {
        "elements": [a.symbol for a in c.graph.atoms],
        "coords": [[round(float(v), 6) for v in row] for row in c.coords],
        "energy": float(c.energy),
        "converged": bool(c.converged),
    }
    return json.dumps(payload, indent=2)
