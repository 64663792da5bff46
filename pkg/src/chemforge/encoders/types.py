"""Shape contracts shared by all modality encoders."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ShapeMismatch(ValueError):
    """An array does not meet the expected (tokens x dim) contract."""


#: Encoder output width per modality.
ENCODING_DIMS: dict[str, int] = {
    "graph": 300,
    "conformation": 512,
    "image": 1024,
    "ms2": 768,
    "ir": 768,
}

#: How many modality tokens a payload occupies.
TOKEN_RULES: dict[str, str] = {
    "graph": "dynamic(atoms)",
    "conformation": "dynamic(atoms)",
    "image": "72-per-tile",
    "ms2": "dynamic(peaks)",
    "ir": "static(50)",
}

IR_TOKENS = 50
IMAGE_TOKENS_PER_TILE = 72

MODALITIES = tuple(ENCODING_DIMS)


@dataclass(frozen=True)
class EncoderSpec:
    modality: str
    dim: int
    token_rule: str

    def __post_init__(self) -> None:
        if self.modality not in ENCODING_DIMS:
            raise ValueError(f"unknown modality {self.modality!r}")
        if self.dim != ENCODING_DIMS[self.modality]:
            raise ValueError(
                f"{self.modality} encodes at {ENCODING_DIMS[self.modality]} dims, "
                f"not {self.dim}"
            )


ENCODER_SPECS: dict[str, EncoderSpec] = {
    name: EncoderSpec(name, ENCODING_DIMS[name], TOKEN_RULES[name])
    for name in ENCODING_DIMS
}


def expected_token_count(
    modality: str,
    *,
    n_atoms: int | None = None,
    n_tiles: int | None = None,
    n_peaks: int | None = None,
) -> int:
    """Token count a payload must occupy under its modality's rule."""
    if modality in ("graph", "conformation"):
        if n_atoms is None:
            raise ValueError(f"{modality} token count needs n_atoms")
        return n_atoms
    if modality == "image":
        if n_tiles is None:
            raise ValueError("image token count needs n_tiles")
        return IMAGE_TOKENS_PER_TILE * n_tiles
    if modality == "ms2":
        if n_peaks is None:
            raise ValueError("ms2 token count needs n_peaks")
        return n_peaks
    if modality == "ir":
        return IR_TOKENS
    raise ValueError(f"unknown modality {modality!r}")


@dataclass(frozen=True, eq=False)
class ModalityTokenSequence:
    """Projected modality embeddings ready to splice into decoder space."""

    modality: str
    embeddings: np.ndarray  # T x dim_out

    def __post_init__(self) -> None:
        if self.modality not in ENCODING_DIMS:
            raise ValueError(f"unknown modality {self.modality!r}")
        arr = np.asarray(self.embeddings, dtype=np.float64)
        if arr.ndim != 2:
            raise ShapeMismatch(
                f"embeddings must be 2D (tokens x dim), got shape {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("embeddings must be finite")
        object.__setattr__(self, "embeddings", arr)

    @property
    def token_count(self) -> int:
        return int(self.embeddings.shape[0])

    @property
    def dim(self) -> int:
        return int(self.embeddings.shape[1])
