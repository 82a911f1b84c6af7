"""Schematic SVG chord diagrams.

Walk positions sit on a circle in order.  The circle is drawn in arcs
coloured by pass: overpasses solid blue, underpasses dashed red.  Each
crossing is a chord joining its two positions, green for positive and grey
for negative crossings.  This is a picture of the Gauss code, not a
planar embedding.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .diagram import Diagram
from .passes import decompose

__all__ = ["render_svg"]

OVER_COLOUR = "#1f56c8"
UNDER_COLOUR = "#c8321f"
SIGN_COLOUR = {1: "#2a9d4b", -1: "#777777"}


def _point(cx, cy, radius, n, p):
    theta = 2 * math.pi * p / n - math.pi / 2
    return cx + radius * math.cos(theta), cy + radius * math.sin(theta)


def render_svg(d: Diagram, size: int = 400, title: str | None = None) -> str:
    cx = cy = size / 2
    radius = size * 0.38
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if title:
        parts.append(f'<title>{escape(title)}</title>')
    n = len(d.walk)
    if n == 0:
        parts.append(
            f'<circle cx="{cx}" cy="{cy}" r="{radius:.2f}" fill="none" stroke="{OVER_COLOUR}" stroke-width="3"/>'
        )
        parts.append("</svg>")
        return "\n".join(parts)
    dec = decompose(d)
    runs = [(True, r) for r in dec.overpasses] + [(False, r) for r in dec.underpasses]
    for over, run in runs:
        # arc from half a step before the first passage to half a step after the last
        a = _point(cx, cy, radius, n, run[0] - 0.5)
        b = _point(cx, cy, radius, n, run[0] + len(run) - 0.5)
        large = 1 if len(run) > n / 2 else 0
        dash = "" if over else ' stroke-dasharray="6,4"'
        colour = OVER_COLOUR if over else UNDER_COLOUR
        parts.append(
            f'<path d="M {a[0]:.2f} {a[1]:.2f} A {radius:.2f} {radius:.2f} 0 {large} 1 {b[0]:.2f} {b[1]:.2f}" '
            f'fill="none" stroke="{colour}" stroke-width="3"{dash}/>'
        )
    for label in d.labels:
        p, q = d.over_pos[label], d.under_pos[label]
        a, b = _point(cx, cy, radius, n, p), _point(cx, cy, radius, n, q)
        parts.append(
            f'<line x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" '
            f'stroke="{SIGN_COLOUR[d.signs[label]]}" stroke-width="1.5"/>'
        )
    for p, passage in enumerate(d.walk):
        x, y = _point(cx, cy, radius * 1.1, n, p)
        text = f"{'OU'[not passage.over]}{passage.crossing}"
        parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}" font-size="11" font-family="monospace" '
            f'text-anchor="middle" dominant-baseline="middle">{text}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
