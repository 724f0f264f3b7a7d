"""Fixed 512x512 SVG renderings.

The query window ``[x_lo, x_hi] x [y_lo, y_hi]`` maps affinely onto the
viewport: ``X = 512 (x - x_lo) / (x_hi - x_lo)`` and
``Y = 512 (y_hi - y) / (y_hi - y_lo)``, so y grows upwards on screen.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .region import Point, Rect, Region

SIZE = 512


class _Canvas:
    def __init__(self, window: Rect):
        self.window = window
        self.items: List[str] = []

    def map(self, x, y) -> Tuple[float, float]:
        w = self.window
        sx = SIZE * (Fraction(x) - w.x_lo) / w.width
        sy = SIZE * (w.y_hi - Fraction(y)) / w.height
        return float(sx), float(sy)

    def rect(self, r: Rect, fill: str, opacity: str = "1", stroke: str = "none") -> None:
        x0, y1 = self.map(r.x_lo, r.y_lo)
        x1, y0 = self.map(r.x_hi, r.y_hi)
        self.items.append(
            f'<rect x="{x0:.3f}" y="{y0:.3f}" width="{x1 - x0:.3f}" height="{y1 - y0:.3f}" '
            f'fill="{fill}" fill-opacity="{opacity}" stroke="{stroke}"/>'
        )

    def polyline(self, pts: Iterable[Tuple[Fraction, Fraction]], stroke: str) -> None:
        coords = " ".join("{:.3f},{:.3f}".format(*self.map(x, y)) for x, y in pts)
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{stroke}" stroke-width="2"/>')

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">'
        )
        body = "\n".join(self.items)
        return f'{head}\n<rect width="{SIZE}" height="{SIZE}" fill="white"/>\n{body}\n</svg>\n'


def region_svg(window: Rect, recovered: Optional[Region], reference: Sequence[Region] = ()) -> str:
    c = _Canvas(window)
    if recovered is not None:
        for r in recovered.rects:
            c.rect(r, "#4477aa", "0.6")
    for region in reference:
        for r in region.rects:
            c.rect(r, "none", "1", stroke="#cc3311")
    return c.render()


def heatmap_svg(window: Rect, cells: Sequence[Tuple[Rect, Fraction]]) -> str:
    """Cells shaded from dark (small value) to light (large value)."""
    c = _Canvas(window)
    if cells:
        lo = min(v for _, v in cells)
        hi = max(v for _, v in cells)
        span = hi - lo or Fraction(1)
        for r, v in cells:
            level = int(255 * (v - lo) / span)
            c.rect(r, f"rgb({level},{level},255)")
    return c.render()


def path_svg(window: Rect, path: Sequence[Point]) -> str:
    c = _Canvas(window)
    c.polyline([(p.x, p.y) for p in path], "#222222")
    return c.render()
