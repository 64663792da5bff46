"""Built-in 5x7 bitmap font used for atom labels and drawing glyphs.

The font is embedded as data so that rendered images are reproducible
byte-for-byte on any machine, independent of system font libraries.
Each glyph is a 7-row, 5-column bitmap; ``X`` marks an inked pixel.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

GLYPH_WIDTH = 5
GLYPH_HEIGHT = 7
# Horizontal advance between glyph origins, in font cells.
GLYPH_ADVANCE = 6

_GLYPH_DATA = """
0
.XXX.
X...X
X..XX
X.X.X
XX..X
X...X
.XXX.
1
..X..
.XX..
..X..
..X..
..X..
..X..
.XXX.
2
.XXX.
X...X
....X
...X.
..X..
.X...
XXXXX
3
XXXXX
...X.
..X..
...X.
....X
X...X
.XXX.
4
...X.
..XX.
.X.X.
X..X.
XXXXX
...X.
...X.
5
XXXXX
X....
XXXX.
....X
....X
X...X
.XXX.
6
..XX.
.X...
X....
XXXX.
X...X
X...X
.XXX.
7
XXXXX
....X
...X.
..X..
..X..
..X..
..X..
8
.XXX.
X...X
X...X
.XXX.
X...X
X...X
.XXX.
9
.XXX.
X...X
X...X
.XXXX
....X
...X.
.XX..
A
.XXX.
X...X
X...X
XXXXX
X...X
X...X
X...X
B
XXXX.
X...X
X...X
XXXX.
X...X
X...X
XXXX.
C
.XXX.
X...X
X....
X....
X....
X...X
.XXX.
D
XXXX.
X...X
X...X
X...X
X...X
X...X
XXXX.
E
XXXXX
X....
X....
XXXX.
X....
X....
XXXXX
F
XXXXX
X....
X....
XXXX.
X....
X....
X....
G
.XXX.
X...X
X....
X.XXX
X...X
X...X
.XXXX
H
X...X
X...X
X...X
XXXXX
X...X
X...X
X...X
I
.XXX.
..X..
..X..
..X..
..X..
..X..
.XXX.
J
..XXX
...X.
...X.
...X.
...X.
X..X.
.XX..
K
X...X
X..X.
X.X..
XX...
X.X..
X..X.
X...X
L
X....
X....
X....
X....
X....
X....
XXXXX
M
X...X
XX.XX
X.X.X
X.X.X
X...X
X...X
X...X
N
X...X
XX..X
XX..X
X.X.X
X..XX
X..XX
X...X
O
.XXX.
X...X
X...X
X...X
X...X
X...X
.XXX.
P
XXXX.
X...X
X...X
XXXX.
X....
X....
X....
Q
.XXX.
X...X
X...X
X...X
X.X.X
X..X.
.XX.X
R
XXXX.
X...X
X...X
XXXX.
X.X..
X..X.
X...X
S
.XXXX
X....
X....
.XXX.
....X
....X
XXXX.
T
XXXXX
..X..
..X..
..X..
..X..
..X..
..X..
U
X...X
X...X
X...X
X...X
X...X
X...X
.XXX.
V
X...X
X...X
X...X
X...X
X...X
.X.X.
..X..
W
X...X
X...X
X...X
X.X.X
X.X.X
XX.XX
X...X
X
X...X
X...X
.X.X.
..X..
.X.X.
X...X
X...X
Y
X...X
X...X
.X.X.
..X..
..X..
..X..
..X..
Z
XXXXX
....X
...X.
..X..
.X...
X....
XXXXX
a
.....
.....
.XXX.
....X
.XXXX
X...X
.XXXX
b
X....
X....
XXXX.
X...X
X...X
X...X
XXXX.
c
.....
.....
.XXX.
X....
X....
X...X
.XXX.
d
....X
....X
.XXXX
X...X
X...X
X...X
.XXXX
e
.....
.....
.XXX.
X...X
XXXXX
X....
.XXX.
f
..XX.
.X..X
.X...
XXX..
.X...
.X...
.X...
g
.....
.XXXX
X...X
X...X
.XXXX
....X
.XXX.
h
X....
X....
XXXX.
X...X
X...X
X...X
X...X
i
..X..
.....
.XX..
..X..
..X..
..X..
.XXX.
j
...X.
.....
..XX.
...X.
...X.
X..X.
.XX..
k
X....
X....
X..X.
X.X..
XX...
X.X..
X..X.
l
.XX..
..X..
..X..
..X..
..X..
..X..
.XXX.
m
.....
.....
XX.X.
X.X.X
X.X.X
X.X.X
X.X.X
n
.....
.....
XXXX.
X...X
X...X
X...X
X...X
o
.....
.....
.XXX.
X...X
X...X
X...X
.XXX.
p
.....
XXXX.
X...X
X...X
XXXX.
X....
X....
q
.....
.XXXX
X...X
X...X
.XXXX
....X
....X
r
.....
.....
X.XX.
XX..X
X....
X....
X....
s
.....
.....
.XXXX
X....
.XXX.
....X
XXXX.
t
.X...
.X...
XXXX.
.X...
.X...
.X..X
..XX.
u
.....
.....
X...X
X...X
X...X
X...X
.XXXX
v
.....
.....
X...X
X...X
X...X
.X.X.
..X..
w
.....
.....
X...X
X...X
X.X.X
X.X.X
.X.X.
x
.....
.....
X...X
.X.X.
..X..
.X.X.
X...X
y
.....
X...X
X...X
.XXXX
....X
X...X
.XXX.
z
.....
.....
XXXXX
...X.
..X..
.X...
XXXXX
+
.....
..X..
..X..
XXXXX
..X..
..X..
.....
-
.....
.....
.....
XXXXX
.....
.....
.....
(
...X.
..X..
.X...
.X...
.X...
..X..
...X.
)
.X...
..X..
...X.
...X.
...X.
..X..
.X...
[
.XXX.
.X...
.X...
.X...
.X...
.X...
.XXX.
]
.XXX.
...X.
...X.
...X.
...X.
...X.
.XXX.
.
.....
.....
.....
.....
.....
.XX..
.XX..
,
.....
.....
.....
.....
..XX.
..X..
.X...
%
XX..X
XX..X
...X.
..X..
.X...
X..XX
X..XX
*
.....
..X..
X.X.X
.XXX.
X.X.X
..X..
.....
/
....X
....X
...X.
..X..
.X...
X....
X....
=
.....
.....
XXXXX
.....
XXXXX
.....
.....
:
.....
.XX..
.XX..
.....
.XX..
.XX..
.....
?
.XXX.
X...X
....X
...X.
..X..
.....
..X..
space
.....
.....
.....
.....
.....
.....
.....
"""


def _parse_glyphs(data: str) -> dict[str, np.ndarray]:
    lines = [line for line in data.splitlines() if line]
    glyphs: dict[str, np.ndarray] = {}
    for i in range(0, len(lines), GLYPH_HEIGHT + 1):
        name = lines[i]
        char = " " if name == "space" else name
        rows = lines[i + 1 : i + 1 + GLYPH_HEIGHT]
        grid = np.array(
            [[cell == "X" for cell in row] for row in rows], dtype=bool
        )
        if grid.shape != (GLYPH_HEIGHT, GLYPH_WIDTH):
            raise ValueError(f"malformed glyph {name!r}")
        glyphs[char] = grid
    return glyphs


GLYPHS: dict[str, np.ndarray] = _parse_glyphs(_GLYPH_DATA)

# Unknown characters render as a filled box so missing glyphs are visible.
_FALLBACK = np.ones((GLYPH_HEIGHT, GLYPH_WIDTH), dtype=bool)


def glyph_bitmap(char: str) -> np.ndarray:
    """Return the 7x5 boolean bitmap for one character."""
    return GLYPHS.get(char, _FALLBACK)


def text_width_cells(text: str) -> int:
    """Width of a string in font cells (advance units, no trailing gap)."""
    if not text:
        return 0
    return GLYPH_ADVANCE * len(text) - (GLYPH_ADVANCE - GLYPH_WIDTH)


@lru_cache(maxsize=512)
def _scaled_glyph(char: str, scale: int) -> np.ndarray:
    return np.kron(glyph_bitmap(char), np.ones((scale, scale), dtype=bool))


def render_text_mask(text: str, scale: int = 1) -> np.ndarray:
    """Rasterize ``text`` to a boolean mask at an integer pixel scale."""
    scale = max(1, int(scale))
    if not text:
        return np.zeros((GLYPH_HEIGHT * scale, 0), dtype=bool)
    width = text_width_cells(text) * scale
    mask = np.zeros((GLYPH_HEIGHT * scale, width), dtype=bool)
    x = 0
    for char in text:
        tile = _scaled_glyph(char, scale)
        mask[:, x : x + tile.shape[1]] |= tile
        x += GLYPH_ADVANCE * scale
    return mask
