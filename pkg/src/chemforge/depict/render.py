"""Molecule and reaction rasterization in three deterministic styles.

Rendering happens in two stages.  First the structure is turned into a
display list of vector primitives (lines, wobbled strokes, atom labels);
then the list is rasterized onto an RGB canvas.  The display list is a
public intermediate so tests and tools can assert on drawing structure
without decoding pixels.

Styles:

* ``clean_a`` — thin lines, bright heteroatom colors.
* ``clean_b`` — thick lines, larger labels, darker heteroatom colors.
* ``handwritten`` — seeded vertex jitter, wobbled strokes of varying
  width, ink-like off-black color.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

import numpy as np
from PIL import Image, ImageDraw

from ..chem.graph import BondOrder, MolGraph
from ..chem.reaction import Reaction
from .errors import CanvasTooSmall
from .font import GLYPH_HEIGHT, render_text_mask, text_width_cells
from .layout import layout_2d
from .raster import STYLES, RasterImage

Color = tuple[int, int, int]

#: Bonds shorter than this many pixels are illegibly small.
MIN_BOND_PX = 12.0

#: Small molecules are enlarged to fill the canvas, up to this multiple
#: of the style's native bond length.
MAX_UPSCALE = 2.4


# --------------------------------------------------------------------------
# Style sheets


@dataclass(frozen=True)
class StyleSheet:
    name: str
    bond_px: float = 40.0
    line_width: float = 2.0
    font_scale: int = 3
    background: Color = (255, 255, 255)
    ink: Color = (0, 0, 0)
    palette: Mapping[str, Color] = field(default_factory=dict)
    vertex_jitter: float = 0.0  # stddev, fraction of bond length
    wobble: float = 0.0  # stroke wobble stddev, fraction of bond length
    width_jitter: float = 0.0  # relative stroke width variation


_BRIGHT = {
    "O": (214, 30, 30),
    "N": (36, 66, 214),
    "S": (178, 142, 0),
    "P": (222, 118, 0),
    "F": (38, 158, 38),
    "Cl": (38, 158, 38),
    "Br": (158, 62, 20),
    "I": (124, 28, 158),
    "B": (222, 140, 140),
}

_DARK = {
    "O": (150, 0, 0),
    "N": (0, 0, 150),
    "S": (126, 100, 0),
    "P": (158, 84, 0),
    "F": (0, 112, 0),
    "Cl": (0, 112, 0),
    "Br": (112, 44, 14),
    "I": (88, 20, 112),
    "B": (158, 98, 98),
}

STYLE_SHEETS: dict[str, StyleSheet] = {
    "clean_a": StyleSheet(
        name="clean_a",
        line_width=2.0,
        font_scale=3,
        palette=_BRIGHT,
    ),
    "clean_b": StyleSheet(
        name="clean_b",
        line_width=3.5,
        font_scale=4,
        palette=_DARK,
    ),
    "handwritten": StyleSheet(
        name="handwritten",
        line_width=2.2,
        font_scale=3,
        ink=(28, 26, 34),
        palette={},
        vertex_jitter=0.045,
        wobble=0.022,
        width_jitter=0.35,
    ),
}


def _sheet(style: str) -> StyleSheet:
    try:
        return STYLE_SHEETS[style]
    except KeyError:
        raise ValueError(f"unknown style {style!r}; expected one of {STYLES}")


# --------------------------------------------------------------------------
# Vector primitives


@dataclass(frozen=True)
class Line:
    x0: float
    y0: float
    x1: float
    y1: float
    width: float
    color: Color


@dataclass(frozen=True)
class Stroke:
    """A hand-drawn polyline; the wobbled counterpart of Line."""

    points: tuple[tuple[float, float], ...]
    width: float
    color: Color


@dataclass(frozen=True)
class TextRun:
    text: str
    rel_scale: float = 1.0  # relative to the label's font scale
    rel_dy: float = 0.0  # vertical shift in main-glyph heights


@dataclass(frozen=True)
class Label:
    x: float
    y: float
    runs: tuple[TextRun, ...]
    color: Color
    font_scale: int


Primitive = Line | Stroke | Label


# --------------------------------------------------------------------------
# Scene construction


def _atom_label_runs(m: MolGraph, index: int) -> tuple[TextRun, ...] | None:
    # Skeletal drawing with terminal carbons written out: interior carbons
    # stay implicit, CH3/CH4 groups and all heteroatoms get labels.
    atom = m.atoms[index]
    needs = (
        atom.symbol != "C"
        or atom.charge != 0
        or atom.isotope != 0
        or m.degree(index) <= 1
    )
    if not needs:
        return None
    runs: list[TextRun] = []
    if atom.isotope:
        runs.append(TextRun(str(atom.isotope), 0.7, -0.45))
    runs.append(TextRun(atom.symbol, 1.0, 0.0))
    if atom.h_count >= 1:
        runs.append(TextRun("H", 1.0, 0.0))
        if atom.h_count > 1:
            runs.append(TextRun(str(atom.h_count), 0.7, 0.35))
    if atom.charge:
        sign = "+" if atom.charge > 0 else "-"
        text = sign if abs(atom.charge) == 1 else f"{abs(atom.charge)}{sign}"
        runs.append(TextRun(text, 0.7, -0.45))
    return tuple(runs)


def _atom_color(m: MolGraph, index: int, sheet: StyleSheet) -> Color:
    return sheet.palette.get(m.atoms[index].symbol, sheet.ink)


def _label_radius(sheet: StyleSheet) -> float:
    return 0.62 * GLYPH_HEIGHT * sheet.font_scale / 2 + 2.0


def _wobble_stroke(
    p0: np.ndarray,
    p1: np.ndarray,
    width: float,
    color: Color,
    scale: float,
    sheet: StyleSheet,
    rng: np.random.Generator,
) -> Stroke:
    vec = p1 - p0
    length = float(np.hypot(*vec))
    segments = max(3, int(length / max(1.0, 0.22 * scale)))
    ts = np.linspace(0.0, 1.0, segments + 1)
    normal = np.array([-vec[1], vec[0]]) / max(length, 1e-9)
    offsets = rng.normal(0.0, sheet.wobble * scale, segments + 1)
    offsets[0] = 0.0
    offsets[-1] = 0.0
    pts = [tuple(p0 + vec * t + normal * off) for t, off in zip(ts, offsets)]
    w = width * (1.0 + rng.uniform(-sheet.width_jitter, sheet.width_jitter))
    return Stroke(points=tuple(pts), width=max(1.0, w), color=color)


def _bond_lines(
    m: MolGraph,
    coords: np.ndarray,
    scale: float,
    sheet: StyleSheet,
    rng: np.random.Generator,
) -> list[Primitive]:
    labeled = {
        i for i in range(m.n_atoms) if _atom_label_runs(m, i) is not None
    }
    ring_center: dict[tuple[int, int], np.ndarray] = {}
    for ring in m.sssr_like_rings():
        center = coords[ring].mean(axis=0)
        k = len(ring)
        for j in range(k):
            a, b = ring[j], ring[(j + 1) % k]
            ring_center.setdefault((min(a, b), max(a, b)), center)

    prims: list[Primitive] = []
    gap = 0.13 * scale
    radius = _label_radius(sheet)

    def emit(p0: np.ndarray, p1: np.ndarray, width: float) -> None:
        if sheet.wobble > 0:
            prims.append(
                _wobble_stroke(p0, p1, width, sheet.ink, scale, sheet, rng)
            )
        else:
            prims.append(
                Line(
                    float(p0[0]),
                    float(p0[1]),
                    float(p1[0]),
                    float(p1[1]),
                    width,
                    sheet.ink,
                )
            )

    for bond in m.bonds:
        pa = coords[bond.a].astype(float)
        pb = coords[bond.b].astype(float)
        vec = pb - pa
        length = float(np.hypot(*vec))
        if length < 1e-9:
            continue
        unit = vec / length
        normal = np.array([-unit[1], unit[0]])
        trim_a = radius if bond.a in labeled else 0.0
        trim_b = radius if bond.b in labeled else 0.0
        if trim_a + trim_b >= length:
            continue
        p0 = pa + unit * trim_a
        p1 = pb - unit * trim_b

        order = bond.order
        if order is BondOrder.SINGLE:
            emit(p0, p1, sheet.line_width)
        elif order is BondOrder.DOUBLE:
            emit(p0 + normal * gap / 2, p1 + normal * gap / 2, sheet.line_width)
            emit(p0 - normal * gap / 2, p1 - normal * gap / 2, sheet.line_width)
        elif order is BondOrder.TRIPLE:
            emit(p0, p1, sheet.line_width)
            emit(p0 + normal * gap, p1 + normal * gap, sheet.line_width)
            emit(p0 - normal * gap, p1 - normal * gap, sheet.line_width)
        else:  # aromatic: solid outer edge plus a shortened inner line
            emit(p0, p1, sheet.line_width)
            key = (bond.a, bond.b)
            center = ring_center.get(key)
            if center is None:
                side = 1.0
            else:
                side = 1.0 if float((center - (pa + pb) / 2) @ normal) > 0 else -1.0
            inner0 = p0 + normal * side * gap + unit * 0.15 * length
            inner1 = p1 + normal * side * gap - unit * 0.15 * length
            emit(inner0, inner1, sheet.line_width * 0.85)
    return prims


def _scene(
    m: MolGraph,
    coords: np.ndarray,
    scale: float,
    sheet: StyleSheet,
    rng: np.random.Generator,
) -> list[Primitive]:
    prims = _bond_lines(m, coords, scale, sheet, rng)
    for i in range(m.n_atoms):
        runs = _atom_label_runs(m, i)
        if runs is None:
            continue
        x, y = float(coords[i, 0]), float(coords[i, 1])
        if sheet.vertex_jitter > 0:
            x += float(rng.normal(0.0, 0.3 * sheet.vertex_jitter * scale))
            y += float(rng.normal(0.0, 0.3 * sheet.vertex_jitter * scale))
        prims.append(
            Label(
                x=x,
                y=y,
                runs=runs,
                color=_atom_color(m, i, sheet),
                font_scale=sheet.font_scale,
            )
        )
    return prims


def _jittered(
    coords: np.ndarray, scale: float, sheet: StyleSheet, rng: np.random.Generator
) -> np.ndarray:
    if sheet.vertex_jitter <= 0:
        return coords
    return coords + rng.normal(0.0, sheet.vertex_jitter * scale, coords.shape)


def molecule_primitives(
    m: MolGraph, style: str = "clean_a", seed: int = 0
) -> list[Primitive]:
    """Display list for one molecule at the style's native bond length.

    Clean styles produce one Line per drawn bond line and one Label per
    annotated atom; the handwritten style replaces each Line with a
    wobbled Stroke.
    """
    sheet = _sheet(style)
    rng = np.random.default_rng(seed)
    coords = _jittered(layout_2d(m) * sheet.bond_px, sheet.bond_px, sheet, rng)
    return _scene(m, coords, sheet.bond_px, sheet, rng)


# --------------------------------------------------------------------------
# Primitive transforms and bounds


def _shift(prims: Iterable[Primitive], dx: float, dy: float) -> list[Primitive]:
    out: list[Primitive] = []
    for p in prims:
        if isinstance(p, Line):
            out.append(
                replace(p, x0=p.x0 + dx, y0=p.y0 + dy, x1=p.x1 + dx, y1=p.y1 + dy)
            )
        elif isinstance(p, Stroke):
            out.append(
                replace(
                    p, points=tuple((x + dx, y + dy) for x, y in p.points)
                )
            )
        else:
            out.append(replace(p, x=p.x + dx, y=p.y + dy))
    return out


def _rescale(prims: Iterable[Primitive], factor: float) -> list[Primitive]:
    if factor == 1.0:
        return list(prims)
    out: list[Primitive] = []
    for p in prims:
        if isinstance(p, Line):
            out.append(
                Line(
                    p.x0 * factor,
                    p.y0 * factor,
                    p.x1 * factor,
                    p.y1 * factor,
                    p.width * factor,
                    p.color,
                )
            )
        elif isinstance(p, Stroke):
            out.append(
                Stroke(
                    tuple((x * factor, y * factor) for x, y in p.points),
                    p.width * factor,
                    p.color,
                )
            )
        else:
            out.append(
                replace(
                    p,
                    x=p.x * factor,
                    y=p.y * factor,
                    font_scale=max(1, round(p.font_scale * factor)),
                )
            )
    return out


def _label_extent(label: Label) -> tuple[float, float]:
    width = 0.0
    for run in label.runs:
        run_scale = max(1, round(label.font_scale * run.rel_scale))
        width += text_width_cells(run.text) * run_scale + run_scale
    height = GLYPH_HEIGHT * label.font_scale * 1.6
    return width, height


def _bounds(prims: Iterable[Primitive]) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for p in prims:
        if isinstance(p, Line):
            xs += [p.x0, p.x1]
            ys += [p.y0, p.y1]
        elif isinstance(p, Stroke):
            xs += [x for x, _ in p.points]
            ys += [y for _, y in p.points]
        else:
            w, h = _label_extent(p)
            xs += [p.x - w / 2, p.x + w / 2]
            ys += [p.y - h / 2, p.y + h / 2]
    if not xs:
        return 0.0, 0.0, 0.0, 0.0
    return min(xs), min(ys), max(xs), max(ys)


# --------------------------------------------------------------------------
# Rasterization


def _blit_label(arr: np.ndarray, label: Label, background: Color) -> None:
    height, width = arr.shape[:2]
    main_h = GLYPH_HEIGHT * label.font_scale
    pieces: list[tuple[np.ndarray, int]] = []  # (mask, top offset)
    total_w = 0
    for run in label.runs:
        run_scale = max(1, round(label.font_scale * run.rel_scale))
        mask = render_text_mask(run.text, run_scale)
        top = run.rel_dy * main_h + (main_h - mask.shape[0]) / 2
        pieces.append((mask, int(round(top))))
        total_w += mask.shape[1] + run_scale
    total_w -= max(1, round(label.font_scale * label.runs[-1].rel_scale))

    x0 = int(round(label.x - total_w / 2))
    y_mid = int(round(label.y - main_h / 2))

    # Knock out the background so bond lines do not strike through text.
    pad = 2
    lo_y = max(0, y_mid - pad)
    hi_y = min(height, y_mid + main_h + pad)
    lo_x = max(0, x0 - pad)
    hi_x = min(width, x0 + total_w + pad)
    if lo_y < hi_y and lo_x < hi_x:
        arr[lo_y:hi_y, lo_x:hi_x] = background

    cursor = x0
    for (mask, top), run in zip(pieces, label.runs):
        run_scale = max(1, round(label.font_scale * run.rel_scale))
        gy0 = y_mid + top
        gx0 = cursor
        gy1 = gy0 + mask.shape[0]
        gx1 = gx0 + mask.shape[1]
        cy0, cx0 = max(0, gy0), max(0, gx0)
        cy1, cx1 = min(height, gy1), min(width, gx1)
        if cy0 < cy1 and cx0 < cx1:
            view = mask[cy0 - gy0 : cy1 - gy0, cx0 - gx0 : cx1 - gx0]
            region = arr[cy0:cy1, cx0:cx1]
            region[view] = label.color
        cursor += mask.shape[1] + run_scale


def rasterize(
    prims: Iterable[Primitive],
    width: int,
    height: int,
    background: Color,
    style: str,
) -> RasterImage:
    """Draw a display list onto a fresh canvas."""
    pil = Image.new("RGB", (width, height), background)
    draw = ImageDraw.Draw(pil)
    labels: list[Label] = []
    for p in prims:
        if isinstance(p, Line):
            draw.line(
                [(p.x0, p.y0), (p.x1, p.y1)],
                fill=p.color,
                width=max(2, round(p.width)),
            )
        elif isinstance(p, Stroke):
            draw.line(
                list(p.points),
                fill=p.color,
                width=max(2, round(p.width)),
                joint="curve",
            )
        else:
            labels.append(p)
    arr = np.array(pil)
    for label in labels:
        _blit_label(arr, label, background)
    return RasterImage.from_array(arr, style)


# --------------------------------------------------------------------------
# Molecule rendering


def _canvas_pair(canvas: int | tuple[int, int]) -> tuple[int, int]:
    if isinstance(canvas, int):
        return canvas, canvas
    w, h = canvas
    return int(w), int(h)


def _margin(sheet: StyleSheet) -> float:
    return 3.2 * sheet.font_scale + 8.0


def render_molecule(
    m: MolGraph,
    style: str = "clean_a",
    canvas: int | tuple[int, int] = 336,
    seed: int = 0,
) -> RasterImage:
    """Draw one molecule centered on a fixed-size canvas.

    The bond length shrinks below the style's native size only when the
    drawing would not fit; CanvasTooSmall is raised once it would drop
    below the legibility floor.
    """
    sheet = _sheet(style)
    width, height = _canvas_pair(canvas)
    unit = layout_2d(m)
    margin = _margin(sheet)
    span_x = float(unit[:, 0].max() - unit[:, 0].min()) if m.n_atoms else 0.0
    span_y = float(unit[:, 1].max() - unit[:, 1].min()) if m.n_atoms else 0.0
    scale = sheet.bond_px * MAX_UPSCALE
    if span_x > 1e-9:
        scale = min(scale, (width - 2 * margin) / span_x)
    if span_y > 1e-9:
        scale = min(scale, (height - 2 * margin) / span_y)
    if scale < MIN_BOND_PX:
        raise CanvasTooSmall(
            f"{width}x{height} canvas forces bond length {scale:.1f}px "
            f"(minimum {MIN_BOND_PX:.0f}px) for a {m.n_atoms}-atom drawing"
        )
    # Stroke width and type size track the realized bond length so small
    # molecules fill the canvas instead of floating in blank space.
    factor = scale / sheet.bond_px
    drawn = replace(
        sheet,
        line_width=sheet.line_width * factor,
        font_scale=max(1, round(sheet.font_scale * factor)),
    )
    rng = np.random.default_rng(seed)
    coords = _jittered(unit * scale, scale, drawn, rng)
    prims = _scene(m, coords, scale, drawn, rng)
    x0, y0, x1, y1 = _bounds(prims)
    over = max((x1 - x0) / max(width - 4, 1), (y1 - y0) / max(height - 4, 1))
    if over > 1.0:  # oversized labels after upscaling: shrink to fit
        prims = _rescale(prims, 1.0 / over)
        x0, y0, x1, y1 = _bounds(prims)
    dx = (width - (x1 - x0)) / 2 - x0
    dy = (height - (y1 - y0)) / 2 - y0
    return rasterize(
        _shift(prims, dx, dy), width, height, sheet.background, sheet.name
    )


# --------------------------------------------------------------------------
# Reaction rendering


@dataclass(frozen=True)
class Region:
    """Placement record for one element of a reaction drawing."""

    kind: str  # molecule | agent | plus | arrow
    x0: float
    y0: float
    x1: float
    y1: float


def _molecule_block(
    m: MolGraph, sheet: StyleSheet, rng: np.random.Generator, scale: float
) -> tuple[list[Primitive], tuple[float, float, float, float]]:
    coords = _jittered(layout_2d(m) * scale, scale, sheet, rng)
    prims = _scene(m, coords, scale, sheet, rng)
    if not prims:  # lone unlabeled atom cannot happen; labels cover it
        return prims, (0.0, 0.0, scale, scale)
    return prims, _bounds(prims)


def _plus_label(sheet: StyleSheet) -> tuple[TextRun, ...]:
    return (TextRun("+", 1.0, 0.0),)


def reaction_primitives(
    r: Reaction, style: str = "clean_a", seed: int = 0
) -> tuple[list[Primitive], list[Region], tuple[int, int]]:
    """Display list, placement regions, and natural canvas size.

    Reactants, an arrow, then products flow left to right at the style's
    native scale; agents sit above the arrow at reduced scale.  The
    natural width grows with every molecule added.
    """
    sheet = _sheet(style)
    rng = np.random.default_rng(seed)
    margin = _margin(sheet) + 4.0
    gap = 0.8 * sheet.bond_px

    agent_sheet = replace(
        sheet,
        font_scale=max(2, round(sheet.font_scale * 0.75)),
        line_width=max(1.2, sheet.line_width * 0.8),
    )
    agent_scale = sheet.bond_px * 0.7

    mol_blocks = [
        _molecule_block(m, sheet, rng, sheet.bond_px)
        for m in list(r.reactants) + list(r.products)
    ]
    agent_blocks = [
        _molecule_block(m, agent_sheet, rng, agent_scale) for m in r.agents
    ]

    n_react = len(r.reactants)
    heights = [b[3] - b[1] for _, b in mol_blocks] or [sheet.bond_px]
    tallest = max(heights)
    agent_w = sum(b[2] - b[0] for _, b in agent_blocks)
    if agent_blocks:
        agent_w += gap * 0.5 * (len(agent_blocks) - 1)
        agent_h = max(b[3] - b[1] for _, b in agent_blocks)
    else:
        agent_h = 0.0

    arrow_len = max(2.4 * sheet.bond_px, agent_w + 0.8 * sheet.bond_px)
    head = 0.28 * sheet.bond_px

    mid_y = margin + agent_h + (0.5 * sheet.bond_px if agent_blocks else 0.0) + tallest / 2

    prims: list[Primitive] = []
    regions: list[Region] = []
    cursor = margin

    def place_block(
        block: tuple[list[Primitive], tuple[float, float, float, float]],
        kind: str,
        center_y: float,
    ) -> None:
        nonlocal cursor
        bprims, (bx0, by0, bx1, by1) = block
        dx = cursor - bx0
        dy = center_y - (by0 + by1) / 2
        prims.extend(_shift(bprims, dx, dy))
        regions.append(Region(kind, bx0 + dx, by0 + dy, bx1 + dx, by1 + dy))
        cursor += bx1 - bx0

    def place_plus() -> None:
        nonlocal cursor
        cursor += gap
        half = 3.5 * sheet.font_scale
        prims.append(
            Label(
                x=cursor,
                y=mid_y,
                runs=_plus_label(sheet),
                color=sheet.ink,
                font_scale=sheet.font_scale,
            )
        )
        regions.append(
            Region("plus", cursor - half, mid_y - half, cursor + half, mid_y + half)
        )
        cursor += gap

    for i, block in enumerate(mol_blocks[:n_react]):
        if i:
            place_plus()
        place_block(block, "molecule", mid_y)

    # Arrow with agents stacked above it.
    cursor += gap
    ax0 = cursor
    ax1 = cursor + arrow_len
    lw = sheet.line_width
    arrow_parts = [
        (np.array([ax0, mid_y]), np.array([ax1, mid_y])),
        (np.array([ax1 - head, mid_y - head * 0.6]), np.array([ax1, mid_y])),
        (np.array([ax1 - head, mid_y + head * 0.6]), np.array([ax1, mid_y])),
    ]
    for p0, p1 in arrow_parts:
        if sheet.wobble > 0:
            prims.append(
                _wobble_stroke(p0, p1, lw, sheet.ink, sheet.bond_px, sheet, rng)
            )
        else:
            prims.append(
                Line(
                    float(p0[0]), float(p0[1]), float(p1[0]), float(p1[1]), lw, sheet.ink
                )
            )
    regions.append(
        Region("arrow", ax0, mid_y - head * 0.6, ax1, mid_y + head * 0.6)
    )

    if agent_blocks:
        agent_cursor = ax0 + (arrow_len - agent_w) / 2
        agent_mid = mid_y - 0.5 * sheet.bond_px - agent_h / 2
        for block in agent_blocks:
            bprims, (bx0, by0, bx1, by1) = block
            dx = agent_cursor - bx0
            dy = agent_mid - (by0 + by1) / 2
            prims.extend(_shift(bprims, dx, dy))
            regions.append(
                Region("agent", bx0 + dx, by0 + dy, bx1 + dx, by1 + dy)
            )
            agent_cursor += (bx1 - bx0) + gap * 0.5

    cursor = ax1 + gap

    for i, block in enumerate(mol_blocks[n_react:]):
        if i:
            place_plus()
        place_block(block, "molecule", mid_y)

    width = int(math.ceil(cursor + margin))
    height = int(
        math.ceil(
            margin
            + agent_h
            + (0.5 * sheet.bond_px if agent_blocks else 0.0)
            + tallest
            + margin
        )
    )
    return prims, regions, (width, height)


def render_reaction(
    r: Reaction,
    style: str = "clean_a",
    canvas: int | tuple[int, int] | None = None,
    seed: int = 0,
) -> RasterImage:
    """Draw a reaction scheme; canvas=None sizes the image to content."""
    sheet = _sheet(style)
    prims, _, (nat_w, nat_h) = reaction_primitives(r, style, seed)
    if canvas is None:
        return rasterize(prims, nat_w, nat_h, sheet.background, sheet.name)
    width, height = _canvas_pair(canvas)
    factor = min(1.0, width / nat_w, height / nat_h)
    if factor * sheet.bond_px < MIN_BOND_PX:
        raise CanvasTooSmall(
            f"{width}x{height} canvas forces bond length "
            f"{factor * sheet.bond_px:.1f}px (minimum {MIN_BOND_PX:.0f}px) "
            f"for a {len(r.all_molecules())}-molecule reaction"
        )
    prims = _rescale(prims, factor)
    x0, y0, x1, y1 = _bounds(prims)
    dx = (width - (x1 - x0)) / 2 - x0
    dy = (height - (y1 - y0)) / 2 - y0
    return rasterize(
        _shift(prims, dx, dy), width, height, sheet.background, sheet.name
    )
