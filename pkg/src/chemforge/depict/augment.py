"""Seeded image augmentation: grayscale, color jitter, rotation, noise."""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .raster import RasterImage

AUGMENT_OPS = ("grayscale", "color_jitter", "rotate_small", "noise")

_JITTER_GAIN = (0.75, 1.25)
_JITTER_SHIFT = (-25.0, 25.0)
_MAX_ROTATE_DEG = 10.0
_NOISE_STD = 8.0


def _grayscale(arr: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    luma = 0.299 * arr[..., 0] + 0.587 * arr[..., 1] + 0.114 * arr[..., 2]
    return np.repeat(np.round(luma)[..., None], 3, axis=2)


def _color_jitter(arr: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    gains = rng.uniform(*_JITTER_GAIN, size=3)
    shift = rng.uniform(*_JITTER_SHIFT)
    return arr * gains + shift


def _rotate_small(arr: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    angle = math.radians(rng.uniform(-_MAX_ROTATE_DEG, _MAX_ROTATE_DEG))
    height, width = arr.shape[:2]
    cy, cx = (height - 1) / 2.0, (width - 1) / 2.0
    yy, xx = np.indices((height, width), dtype=np.float64)
    cos_a, sin_a = math.cos(angle), math.sin(angle)
    # Inverse mapping with nearest-neighbor sampling.
    src_x = cos_a * (xx - cx) + sin_a * (yy - cy) + cx
    src_y = -sin_a * (xx - cx) + cos_a * (yy - cy) + cy
    xi = np.round(src_x).astype(np.int64)
    yi = np.round(src_y).astype(np.int64)
    inside = (xi >= 0) & (xi < width) & (yi >= 0) & (yi < height)
    fill = arr[0, 0]  # corner pixel doubles as the background color
    out = np.empty_like(arr)
    out[:] = fill
    out[inside] = arr[yi[inside], xi[inside]]
    return out


def _noise(arr: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    return arr + rng.normal(0.0, _NOISE_STD, arr.shape)


_OPS = {
    "grayscale": _grayscale,
    "color_jitter": _color_jitter,
    "rotate_small": _rotate_small,
    "noise": _noise,
}


def augment(img: RasterImage, seed: int, ops: Iterable[str]) -> RasterImage:
    """Apply the named operations in order, reproducibly for a seed.

    Dimensions never change; an empty op list returns an identical copy.
    """
    ops = list(ops)
    unknown = [op for op in ops if op not in _OPS]
    if unknown:
        raise ValueError(
            f"unknown augment ops {unknown}; expected a subset of {AUGMENT_OPS}"
        )
    if not ops:
        return RasterImage(
            width=img.width,
            height=img.height,
            pixels=img.pixels,
            style=img.style,
        )
    rng = np.random.default_rng(seed)
    arr = img.as_array().astype(np.float64)
    for op in ops:
        arr = _OPS[op](arr, rng)
    clipped = np.clip(np.round(arr), 0, 255).astype(np.uint8)
    return RasterImage.from_array(clipped, img.style)
