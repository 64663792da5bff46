"""Tiling of rendered images into encoder-ready sub-images.

An image is padded to multiples of the tile size and cut row-major.
Every tile is worth a fixed number of modality tokens:
(tile_size / patch_size)^2 patches, reduced by a factor n, which with
the defaults is (336/14)^2 / 8 = 72 tokens per tile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .raster import RasterImage


@dataclass(frozen=True)
class ImageEncoderConfig:
    tile_size: int = 336
    patch_size: int = 14
    reduce_factor: int = 8

    def __post_init__(self) -> None:
        if self.tile_size <= 0 or self.patch_size <= 0 or self.reduce_factor <= 0:
            raise ValueError("tile_size, patch_size, reduce_factor must be positive")
        if self.tile_size % self.patch_size:
            raise ValueError("tile_size must be divisible by patch_size")
        patches = (self.tile_size // self.patch_size) ** 2
        if patches % self.reduce_factor:
            raise ValueError("patch count must be divisible by reduce_factor")

    @property
    def patches_per_tile(self) -> int:
        return (self.tile_size // self.patch_size) ** 2

    @property
    def tokens_per_tile(self) -> int:
        return self.patches_per_tile // self.reduce_factor


DEFAULT_IMAGE_CONFIG = ImageEncoderConfig()


@dataclass(frozen=True)
class TileSet:
    tiles: tuple[RasterImage, ...]
    grid: tuple[int, int]  # (rows, cols)
    tile_size: int
    tokens_per_tile: int

    def __post_init__(self) -> None:
        rows, cols = self.grid
        if len(self.tiles) != rows * cols:
            raise ValueError(
                f"{len(self.tiles)} tiles do not fill a {rows}x{cols} grid"
            )
        for tile in self.tiles:
            if tile.width != self.tile_size or tile.height != self.tile_size:
                raise ValueError("every tile must be tile_size x tile_size")

    @property
    def token_count(self) -> int:
        return len(self.tiles) * self.tokens_per_tile


def token_budget(
    width: int, height: int, cfg: ImageEncoderConfig = DEFAULT_IMAGE_CONFIG
) -> int:
    """Modality tokens an image of the given size will occupy."""
    tiles = math.ceil(width / cfg.tile_size) * math.ceil(height / cfg.tile_size)
    return tiles * cfg.tokens_per_tile


def tile_image(
    img: RasterImage, cfg: ImageEncoderConfig = DEFAULT_IMAGE_CONFIG
) -> TileSet:
    """Pad to tile-size multiples with the background color, cut row-major."""
    size = cfg.tile_size
    cols = math.ceil(img.width / size)
    rows = math.ceil(img.height / size)
    arr = img.as_array()
    padded = np.empty((rows * size, cols * size, 3), dtype=np.uint8)
    padded[:] = arr[0, 0]  # corner pixel doubles as the background color
    padded[: img.height, : img.width] = arr

    tiles = []
    for r in range(rows):
        for c in range(cols):
            block = padded[r * size : (r + 1) * size, c * size : (c + 1) * size]
            tiles.append(RasterImage.from_array(block, img.style))
    return TileSet(
        tiles=tuple(tiles),
        grid=(rows, cols),
        tile_size=size,
        tokens_per_tile=cfg.tokens_per_tile,
    )
