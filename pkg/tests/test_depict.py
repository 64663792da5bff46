import math

import numpy as np
import pytest

from chemforge.chem import bundled_corpus, parse_reaction, parse_smiles
from chemforge.depict import (
    CanvasTooSmall,
    ImageEncoderConfig,
    RasterImage,
    augment,
    image_filename,
    layout_2d,
    load_png,
    molecule_primitives,
    reaction_primitives,
    render_molecule,
    render_reaction,
    save_png,
    tile_image,
    token_budget,
)
from chemforge.depict.render import Label, Line, Stroke


def ink_fraction(img: RasterImage) -> float:
    arr = img.as_array()
    return float((arr != 255).any(axis=2).mean())


def label_texts(prims) -> list[str]:
    return [
        "".join(run.text for run in p.runs) for p in prims if isinstance(p, Label)
    ]


# ---------------------------------------------------------------------------
# layout


def test_benzene_regular_hexagon():
    m = parse_smiles("c1ccccc1")
    xy = layout_2d(m)
    ring = m.sssr_like_rings()[0]
    pts = xy[ring]
    for j in range(6):
        u = pts[j - 1] - pts[j]
        v = pts[(j + 1) % 6] - pts[j]
        cos = float(u @ v) / (np.linalg.norm(u) * np.linalg.norm(v))
        angle = math.degrees(math.acos(max(-1.0, min(1.0, cos))))
        assert abs(angle - 120.0) < 1e-6
        assert abs(np.linalg.norm(u) - 1.0) < 1e-9


def test_pentane_zigzag_alternates():
    xy = layout_2d(parse_smiles("CCCCC"))
    angles = []
    for i in range(4):
        v = xy[i + 1] - xy[i]
        angles.append(math.degrees(math.atan2(v[1], v[0])))
    assert angles == pytest.approx([30.0, -30.0, 30.0, -30.0], abs=1e-9)


def test_single_atom_at_origin():
    xy = layout_2d(parse_smiles("C"))
    assert xy.shape == (1, 2)
    assert float(np.abs(xy).max()) == 0.0


def test_unit_bond_lengths_on_ring_systems():
    for smi in ("c1ccc2ccccc2c1", "C1CC1CC2CCC2", "Cc1ccccc1", "CC(=O)OC", "C#CC"):
        m = parse_smiles(smi)
        xy = layout_2d(m)
        for bond in m.bonds:
            length = float(np.linalg.norm(xy[bond.a] - xy[bond.b]))
            assert abs(length - 1.0) < 1e-6, (smi, bond)


def test_components_separated():
    m = parse_smiles("CCO.CC")
    xy = layout_2d(m)
    comps = m.components()
    right_of_first = max(xy[i, 0] for i in comps[0])
    left_of_second = min(xy[i, 0] for i in comps[1])
    assert left_of_second - right_of_first >= 1.5 - 1e-9


def test_layout_deterministic():
    for smi in bundled_corpus()[:40]:
        m = parse_smiles(smi)
        assert np.array_equal(layout_2d(m), layout_2d(m))


# ---------------------------------------------------------------------------
# molecule rendering


def test_ethanol_primitives_clean():
    prims = molecule_primitives(parse_smiles("CCO"), "clean_a")
    lines = [p for p in prims if isinstance(p, Line)]
    assert len(lines) == 2
    assert "OH" in label_texts(prims)


def test_ethanol_primitives_handwritten_are_strokes():
    prims = molecule_primitives(parse_smiles("CCO"), "handwritten", seed=1)
    assert sum(isinstance(p, Stroke) for p in prims) == 2
    assert sum(isinstance(p, Line) for p in prims) == 0


def test_methane_single_centered_glyph():
    prims = molecule_primitives(parse_smiles("C"))
    assert label_texts(prims) == ["CH4"]
    assert not any(isinstance(p, (Line, Stroke)) for p in prims)
    img = render_molecule(parse_smiles("C"), "clean_a", 336)
    arr = img.as_array()
    ys, xs = np.nonzero((arr != 255).any(axis=2))
    cx = (xs.min() + xs.max()) / 2
    cy = (ys.min() + ys.max()) / 2
    assert abs(cx - 167.5) < 8
    assert abs(cy - 167.5) < 8


def test_charged_and_isotopic_labels():
    texts = label_texts(molecule_primitives(parse_smiles("[13CH3][N+](C)(C)C")))
    assert "13CH3" in texts
    assert "N+" in texts


def test_render_deterministic_bytes():
    m = parse_smiles("CC(=O)Oc1ccccc1C(=O)O")
    for style in ("clean_a", "clean_b", "handwritten"):
        a = render_molecule(m, style, 336, seed=7)
        b = render_molecule(m, style, 336, seed=7)
        assert a.pixels == b.pixels
        assert a.width == a.height == 336


def test_handwritten_seed_changes_image():
    m = parse_smiles("CCO")
    a = render_molecule(m, "handwritten", 336, seed=1)
    b = render_molecule(m, "handwritten", 336, seed=2)
    assert a.pixels != b.pixels


def test_ink_coverage_at_least_one_percent():
    smis = ["CCO", "CC", "c1ccccc1", "C1CCCCC1"] + [
        s for s in bundled_corpus()[:25] if parse_smiles(s).bonds
    ]
    for smi in smis:
        img = render_molecule(parse_smiles(smi), "clean_a", 336)
        assert ink_fraction(img) >= 0.01, smi


def test_styles_produce_distinct_images():
    m = parse_smiles("CCO")
    imgs = {
        style: render_molecule(m, style, 336, seed=3)
        for style in ("clean_a", "clean_b", "handwritten")
    }
    assert imgs["clean_a"].pixels != imgs["clean_b"].pixels
    assert imgs["clean_a"].pixels != imgs["handwritten"].pixels
    # clean styles color the oxygen label, so channels differ somewhere
    assert not imgs["clean_a"].is_grayscale()
    assert not imgs["clean_b"].is_grayscale()


def test_unknown_style_rejected():
    with pytest.raises(ValueError):
        render_molecule(parse_smiles("C"), "sketchy", 336)


def test_canvas_too_small():
    long_chain = parse_smiles("C" * 16)
    with pytest.raises(CanvasTooSmall):
        render_molecule(long_chain, "clean_a", 64)
    img = render_molecule(long_chain, "clean_a", 512)
    assert img.width == 512


# ---------------------------------------------------------------------------
# reactions


def test_reaction_one_to_one_regions():
    rxn = parse_reaction("CCO>>CC=O")
    _, regions, _ = reaction_primitives(rxn)
    kinds = [r.kind for r in regions]
    assert kinds.count("molecule") == 2
    assert kinds.count("arrow") == 1
    assert kinds.count("plus") == 0


def test_reaction_plus_between_reactants():
    rxn = parse_reaction("CCO.CC(=O)O>OS(=O)(=O)O>CC(=O)OCC.O")
    prims, regions, _ = reaction_primitives(rxn)
    kinds = [r.kind for r in regions]
    assert kinds.count("molecule") == 4
    assert kinds.count("plus") == 2
    assert kinds.count("agent") == 1
    assert "+" in ("".join(r.text for r in p.runs) for p in prims if isinstance(p, Label))
    # agent sits above the arrow
    arrow = next(r for r in regions if r.kind == "arrow")
    agent = next(r for r in regions if r.kind == "agent")
    assert agent.y1 <= arrow.y0 + 1e-6


def test_reaction_width_grows_with_molecule_count():
    widths = []
    for smi in ("CCO>>CCO", "CCO.CC>>CCO", "CCO.CC.CCC>>CCO"):
        widths.append(reaction_primitives(parse_reaction(smi))[2][0])
    assert widths[0] < widths[1] < widths[2]


def test_reaction_render_auto_and_fixed_canvas():
    rxn = parse_reaction("CCO.CC(=O)O>>CC(=O)OCC.O")
    auto = render_reaction(rxn, "clean_a")
    again = render_reaction(rxn, "clean_a")
    assert auto.pixels == again.pixels
    fixed = render_reaction(rxn, "clean_a", canvas=(700, 400))
    assert (fixed.width, fixed.height) == (700, 400)
    with pytest.raises(CanvasTooSmall):
        render_reaction(rxn, "clean_a", canvas=(120, 60))


# ---------------------------------------------------------------------------
# augmentation


def test_grayscale_channel_equal():
    img = render_molecule(parse_smiles("CCO"), "clean_a", 336)
    assert not img.is_grayscale()
    gray = augment(img, seed=0, ops=["grayscale"])
    assert gray.is_grayscale()
    assert (gray.width, gray.height) == (img.width, img.height)


def test_empty_ops_identity():
    img = render_molecule(parse_smiles("CCO"), "clean_a", 336)
    out = augment(img, seed=4, ops=[])
    assert out.pixels == img.pixels


def test_augment_deterministic_and_shape_preserving():
    img = render_molecule(parse_smiles("c1ccncc1"), "clean_a", 336)
    ops = ["color_jitter", "rotate_small", "noise"]
    a = augment(img, seed=12, ops=ops)
    b = augment(img, seed=12, ops=ops)
    c = augment(img, seed=13, ops=ops)
    assert a.pixels == b.pixels
    assert a.pixels != c.pixels
    assert (a.width, a.height) == (img.width, img.height)
    assert a.pixels != img.pixels


def test_augment_rejects_unknown_op():
    img = render_molecule(parse_smiles("C"), "clean_a", 64)
    with pytest.raises(ValueError):
        augment(img, seed=0, ops=["sharpen"])


# ---------------------------------------------------------------------------
# tiling and token accounting


def test_single_tile_336():
    img = render_molecule(parse_smiles("CCO"), "clean_a", 336)
    ts = tile_image(img)
    assert len(ts.tiles) == 1
    assert ts.grid == (1, 1)
    assert ts.token_count == 72


def test_two_tiles_672x336():
    img = render_molecule(parse_smiles("CCO"), "clean_a", (672, 336))
    ts = tile_image(img)
    assert len(ts.tiles) == 2
    assert ts.grid == (1, 2)
    assert ts.token_count == 144


def test_tokens_per_tile_arithmetic():
    cfg = ImageEncoderConfig()
    assert (336 // 14) ** 2 == 576
    assert cfg.patches_per_tile == 576
    assert cfg.tokens_per_tile == 72


def test_tiles_reassemble_padded_image():
    img = render_molecule(parse_smiles("CCO"), "clean_a", (500, 400))
    ts = tile_image(img)
    rows, cols = ts.grid
    assert rows == 2 and cols == 2
    stitched = np.zeros((rows * 336, cols * 336, 3), dtype=np.uint8)
    for idx, tile in enumerate(ts.tiles):
        r, c = divmod(idx, cols)
        stitched[r * 336 : (r + 1) * 336, c * 336 : (c + 1) * 336] = tile.as_array()
    assert np.array_equal(stitched[:400, :500], img.as_array())
    corner = img.as_array()[0, 0]
    assert np.array_equal(stitched[400:, :], np.broadcast_to(corner, stitched[400:, :].shape))


def test_token_budget_formula():
    for w, h in ((336, 336), (672, 336), (1000, 700), (1, 1), (337, 336)):
        tiles = math.ceil(w / 336) * math.ceil(h / 336)
        assert token_budget(w, h) == tiles * 72


def test_config_validation():
    with pytest.raises(ValueError):
        ImageEncoderConfig(tile_size=100, patch_size=14)
    with pytest.raises(ValueError):
        ImageEncoderConfig(tile_size=336, patch_size=14, reduce_factor=7)


# ---------------------------------------------------------------------------
# raster type and PNG io


def test_raster_buffer_validation():
    with pytest.raises(ValueError):
        RasterImage(width=4, height=4, pixels=b"\x00" * 10, style="clean_a")


def test_png_roundtrip(tmp_path):
    img = render_molecule(parse_smiles("CCO"), "clean_b", 336)
    path = tmp_path / image_filename("sample42", "clean_b")
    assert path.name == "sample42_clean_b.png"
    save_png(img, path)
    back = load_png(path, style="clean_b")
    assert back.pixels == img.pixels
    assert (back.width, back.height) == (img.width, img.height)
