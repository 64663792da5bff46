"""2D depiction: layout, styled rasterization, augmentation, tiling."""

from .augment import AUGMENT_OPS, augment
from .errors import CanvasTooSmall
from .layout import layout_2d
from .raster import (
    STYLES,
    RasterImage,
    image_filename,
    load_png,
    save_png,
)
from .render import (
    Label,
    Line,
    Region,
    Stroke,
    StyleSheet,
    TextRun,
    molecule_primitives,
    rasterize,
    reaction_primitives,
    render_molecule,
    render_reaction,
)
from .tiling import (
    DEFAULT_IMAGE_CONFIG,
    ImageEncoderConfig,
    TileSet,
    tile_image,
    token_budget,
)

__all__ = [
    "AUGMENT_OPS",
    "CanvasTooSmall",
    "DEFAULT_IMAGE_CONFIG",
    "ImageEncoderConfig",
    "Label",
    "Line",
    "RasterImage",
    "Region",
    "STYLES",
    "Stroke",
    "StyleSheet",
    "TextRun",
    "TileSet",
    "augment",
    "image_filename",
    "layout_2d",
    "load_png",
    "molecule_primitives",
    "rasterize",
    "reaction_primitives",
    "render_molecule",
    "render_reaction",
    "save_png",
    "tile_image",
    "token_budget",
]
