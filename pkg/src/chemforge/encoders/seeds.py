"""Seeded randomness and the gelu activation shared by the encoders.

Every weight tensor is derived from (seed, name) through SHA-256, so two
processes with the same seed always materialize identical weights, and
independent implementations can regenerate them from the names alone.
"""

from __future__ import annotations

import hashlib

import numpy as np
from scipy.special import erf

_SQRT2 = float(np.sqrt(2.0))
_INV_SQRT_2PI = float(1.0 / np.sqrt(2.0 * np.pi))


def rng_for(seed: int, name: str) -> np.random.Generator:
    """A generator keyed by (seed, name), stable across platforms."""
    digest = hashlib.sha256(f"{seed}:{name}".encode("utf-8")).digest()
    return np.random.default_rng(int.from_bytes(digest[:16], "little"))


def seeded_matrix(seed: int, name: str, shape: tuple[int, ...]) -> np.ndarray:
    """Gaussian weights scaled by 1/sqrt(fan_in) for stable depth."""
    fan_in = shape[0] if len(shape) > 1 else max(shape[0], 1)
    return rng_for(seed, name).normal(0.0, 1.0 / np.sqrt(fan_in), shape)


def seeded_vector(seed: int, name: str, dim: int) -> np.ndarray:
    return rng_for(seed, name).normal(0.0, 1.0, dim)


def gelu(x: np.ndarray) -> np.ndarray:
    """Exact erf formulation: x/2 * (1 + erf(x / sqrt(2)))."""
    x = np.asarray(x, dtype=np.float64)
    return 0.5 * x * (1.0 + erf(x / _SQRT2))


def gelu_grad(x: np.ndarray) -> np.ndarray:
    """Analytic derivative of the erf-exact gelu."""
    x = np.asarray(x, dtype=np.float64)
    cdf = 0.5 * (1.0 + erf(x / _SQRT2))
    pdf = _INV_SQRT_2PI * np.exp(-0.5 * x * x)
    return cdf + x * pdf


def gelu_tanh_reference(x: np.ndarray) -> np.ndarray:
    """The common tanh approximation, kept as a comparison reference."""
    x = np.asarray(x, dtype=np.float64)
    return 0.5 * x * (1.0 + np.tanh(np.sqrt(2.0 / np.pi) * (x + 0.044715 * x**3)))
