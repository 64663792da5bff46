"""Errors raised by the drawing pipeline."""

from __future__ import annotations


class CanvasTooSmall(ValueError):
    """The requested canvas cannot fit the drawing at a legible scale.

    Raised when fitting the laid-out structure into the given pixel
    dimensions would push the bond length below the minimum legible
    size.  Enlarge the canvas or draw fewer molecules per image.
    """
