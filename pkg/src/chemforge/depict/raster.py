"""In-memory RGB raster type and PNG persistence."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

STYLES = ("clean_a", "clean_b", "handwritten")


@dataclass(frozen=True)
class RasterImage:
    """An 8-bit RGB image with a row-major byte buffer.

    ``pixels`` holds exactly ``width * height * 3`` bytes, rows top to
    bottom, channels interleaved R, G, B.
    """

    width: int
    height: int
    pixels: bytes
    style: str
    channels: int = field(default=3)

    def __post_init__(self) -> None:
        if self.channels != 3:
            raise ValueError("only 3-channel RGB images are supported")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("image dimensions must be positive")
        expected = self.width * self.height * 3
        if len(self.pixels) != expected:
            raise ValueError(
                f"pixel buffer holds {len(self.pixels)} bytes, "
                f"expected {expected} for {self.width}x{self.height} RGB"
            )

    @classmethod
    def from_array(cls, array: np.ndarray, style: str) -> "RasterImage":
        array = np.asarray(array, dtype=np.uint8)
        if array.ndim != 3 or array.shape[2] != 3:
            raise ValueError("expected an array of shape (height, width, 3)")
        height, width = array.shape[:2]
        return cls(width=width, height=height, pixels=array.tobytes(), style=style)

    def as_array(self) -> np.ndarray:
        """View the buffer as a (height, width, 3) uint8 array (copy)."""
        flat = np.frombuffer(self.pixels, dtype=np.uint8)
        return flat.reshape(self.height, self.width, 3).copy()

    def is_grayscale(self) -> bool:
        """True when every pixel has equal R, G and B."""
        arr = self.as_array()
        return bool(
            np.array_equal(arr[..., 0], arr[..., 1])
            and np.array_equal(arr[..., 1], arr[..., 2])
        )


def image_filename(sample_id: str, style: str) -> str:
    """Canonical on-disk name for a rendered sample."""
    return f"{sample_id}_{style}.png"


def save_png(img: RasterImage, path: str | Path) -> Path:
    """Write the image as an 8-bit RGB PNG."""
    path = Path(path)
    pil = Image.frombytes("RGB", (img.width, img.height), img.pixels)
    pil.save(path, format="PNG")
    return path


def load_png(path: str | Path, style: str = "clean_a") -> RasterImage:
    """Read a PNG back into a RasterImage (converted to RGB if needed)."""
    with Image.open(path) as pil:
        rgb = pil.convert("RGB")
        return RasterImage(
            width=rgb.width,
            height=rgb.height,
            pixels=rgb.tobytes(),
            style=style,
        )
