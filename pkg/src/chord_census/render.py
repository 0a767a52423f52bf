"""Static SVG picture of a color diagram.

Points are numbered clockwise starting at the top, matching the package's
numbering convention.  Arcs follow the fixed pattern (black arcs drawn
black, white arcs white on a light background so both read), chords are
straight segments.  Output bytes are deterministic for a given diagram:
coordinates use fixed two-decimal formatting and elements are emitted in
index order.
"""

from __future__ import annotations

import math

from .diagram import DiagramLike, _gluing_of

__all__ = ["render_svg"]

_SIZE = 440
_RADIUS = 170
_LABEL_RADIUS = 196


def _point(i: int, pts: int) -> tuple[float, float]:
    """Screen position of point i: clockwise from 12 o'clock."""
    angle = 2.0 * math.pi * (i - 1) / pts
    c = _SIZE / 2.0
    return (c + _RADIUS * math.sin(angle), c - _RADIUS * math.cos(angle))


def _fmt(x: float) -> str:
    return f"{x + 0.0:.2f}"  # +0.0 folds -0.0 into 0.0


def render_svg(d: DiagramLike) -> str:
    """Render a diagram as a standalone SVG document string."""
    g = _gluing_of(d)
    pts = g.points
    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" '
        f'height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">'
    )
    out.append(f'<rect width="{_SIZE}" height="{_SIZE}" fill="#d9d9d9"/>')

    # circle arcs, clockwise span (i, i+1); odd i black
    for i in range(1, pts + 1):
        x1, y1 = _point(i, pts)
        x2, y2 = _point(i % pts + 1, pts)
        color = "#000000" if i % 2 == 1 else "#ffffff"
        large = 1 if pts == 2 else 0  # two points means each arc is a half turn
        out.append(
            f'<path d="M {_fmt(x1)} {_fmt(y1)} '
            f'A {_RADIUS} {_RADIUS} 0 {large} 1 {_fmt(x2)} {_fmt(y2)}" '
            f'fill="none" stroke="{color}" stroke-width="8"/>'
        )

    for a, b in g.chords:
        x1, y1 = _point(a, pts)
        x2, y2 = _point(b, pts)
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" '
            f'y2="{_fmt(y2)}" stroke="#4a6a8a" stroke-width="2"/>'
        )

    for i in range(1, pts + 1):
        x, y = _point(i, pts)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#bb3333"/>')
        angle = 2.0 * math.pi * (i - 1) / pts
        c = _SIZE / 2.0
        lx = c + _LABEL_RADIUS * math.sin(angle)
        ly = c - _LABEL_RADIUS * math.cos(angle)
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="monospace" '
            f'font-size="14" text-anchor="middle" dominant-baseline="middle">'
            f"{i}</text>"
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
