"""Plain-text and SVG pictures of lattice Pauli operators.

Lattice convention matches :mod:`fermicode.pauli`: x grows rightward,
y grows upward, the horizontal edge at ``(i, j)`` points right from
vertex ``(i, j)``, the vertical edge points up.  Vertices can carry
marks (typically a syndrome); marked vertices render as ``(*)`` in text
and as filled circles in SVG.
"""

from __future__ import annotations

from .pauli import PauliVec

__all__ = ["render_ascii", "render_svg"]

_SVG_COLORS = {"X": "#d62728", "Z": "#1f77b4", "Y": "#2ca02c"}


def _bounds(vec: PauliVec, marks) -> tuple[int, int, int, int]:
    xs, ys = [0], [0]
    for i, j, orient, _ in vec.edges():
        xs.extend((i, i + (1 - orient)))
        ys.extend((j, j + orient))
    for x, y in marks:
        xs.append(x)
        ys.append(y)
    return min(xs), max(xs), min(ys), max(ys)


def render_ascii(vec: PauliVec, marks=()) -> str:
    """Draw the operator (and optional vertex marks) as a text grid."""
    marks = {tuple(m) for m in marks}
    x0, x1, y0, y1 = _bounds(vec, marks)
    h = {(i, j): letter for i, j, o, letter in vec.edges() if o == 0}
    v = {(i, j): letter for i, j, o, letter in vec.edges() if o == 1}

    lines = []
    for j in range(y1, y0 - 1, -1):
        # Row of vertices at height j with horizontal edges between them.
        row = []
        for i in range(x0, x1 + 1):
            row.append("(*)" if (i, j) in marks else " + ")
            if i < x1:
                letter = h.get((i, j))
                row.append(f"--{letter}--" if letter else "     ")
        lines.append("".join(row))
        # Interline with the vertical edges dropping to height j-1.
        if j > y0:
            row = []
            for i in range(x0, x1 + 1):
                letter = v.get((i, j - 1))
                row.append(f" {letter} " if letter else " . ")
                if i < x1:
                    row.append("     ")
            lines.append("".join(row))
    footer = f"x: {x0}..{x1}  y: {y0}..{y1}  weight {vec.weight()}"
    return "\n".join(lines + [footer])


def render_svg(vec: PauliVec, marks=(), cell: int = 40) -> str:
    """Draw the operator as a standalone SVG document."""
    marks = [tuple(m) for m in marks]
    x0, x1, y0, y1 = _bounds(vec, marks)
    pad = cell
    width = (x1 - x0) * cell + 2 * pad
    height = (y1 - y0) * cell + 2 * pad

    def px(i: int) -> int:
        return pad + (i - x0) * cell

    def py(j: int) -> int:
        return height - pad - (j - y0) * cell  # y axis points up

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    # Faint grid.
    for i in range(x0, x1 + 1):
        for j in range(y0, y1 + 1):
            if i < x1:
                parts.append(
                    f'<line x1="{px(i)}" y1="{py(j)}" x2="{px(i + 1)}" y2="{py(j)}" '
                    'stroke="#dddddd" stroke-width="1"/>'
                )
            if j < y1:
                parts.append(
                    f'<line x1="{px(i)}" y1="{py(j)}" x2="{px(i)}" y2="{py(j + 1)}" '
                    'stroke="#dddddd" stroke-width="1"/>'
                )
    # Acted-on edges, colored by letter, labeled at the midpoint.
    for i, j, orient, letter in vec.edges():
        x2, y2 = (i + 1, j) if orient == 0 else (i, j + 1)
        color = _SVG_COLORS[letter]
        parts.append(
            f'<line x1="{px(i)}" y1="{py(j)}" x2="{px(x2)}" y2="{py(y2)}" '
            f'stroke="{color}" stroke-width="4"/>'
        )
        mx, my = (px(i) + px(x2)) / 2, (py(j) + py(y2)) / 2
        parts.append(
            f'<text x="{mx}" y="{my - 5}" font-size="14" font-family="monospace" '
            f'fill="{color}" text-anchor="middle">{letter}</text>'
        )
    # Vertices; marked ones filled.
    for i in range(x0, x1 + 1):
        for j in range(y0, y1 + 1):
            filled = (i, j) in marks
            parts.append(
                f'<circle cx="{px(i)}" cy="{py(j)}" r="{6 if filled else 3}" '
                f'fill="{"#000000" if filled else "#999999"}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
