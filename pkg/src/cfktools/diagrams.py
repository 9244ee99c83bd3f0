"""Static SVG grid diagrams for staircases and filtered complexes.

Each generator gets one dot.  Its column is chosen so that arrows connect
dot to dot whenever the complex allows it: an arrow with upower a forces the
target's column to sit a cells left of the source's.  Columns are assigned
per connected component by a breadth-first walk rooted at the component's
first generator (conflicting constraints, which graded complexes built here
never produce, fall back to the walk tree).  Fixed cell size, no styling
knobs.
"""

from __future__ import annotations

from collections import deque

from .filtered import FilteredComplex, from_staircase
from .staircase import Staircase

CELL = 40
DOT_RADIUS = 5
PAD_CELLS = 1


def _columns(complex: FilteredComplex) -> dict[str, int]:
    neighbours: dict[str, list[tuple[str, int]]] = {g.name: [] for g in complex.generators}
    for a in sorted(complex.arrows):
        neighbours[a.source].append((a.target, -a.upower))
        neighbours[a.target].append((a.source, a.upower))
    cols: dict[str, int] = {}
    for g in complex.generators:
        if g.name in cols:
            continue
        cols[g.name] = 0
        queue = deque([g.name])
        while queue:
            name = queue.popleft()
            for other, offset in neighbours[name]:
                if other not in cols:
                    cols[other] = cols[name] + offset
                    queue.append(other)
    return cols


def svg_for_complex(complex: FilteredComplex) -> str:
    cols = _columns(complex)
    dots = {
        g.name: (cols[g.name], g.alexander + cols[g.name])
        for g in complex.generators
    }
    arrows = []
    for a in sorted(complex.arrows):
        x0, y0 = dots[a.source]
        tip = (x0 - a.upower, complex.generator(a.target).alexander + x0 - a.upower)
        arrows.append(((x0, y0), tip))

    points = list(dots.values()) + [tip for _, tip in arrows]
    if not points:
        points = [(0, 0)]
    imin = min(p[0] for p in points) - PAD_CELLS
    imax = max(p[0] for p in points) + PAD_CELLS
    jmin = min(p[1] for p in points) - PAD_CELLS
    jmax = max(p[1] for p in points) + PAD_CELLS
    width = (imax - imin + 1) * CELL
    height = (jmax - jmin + 1) * CELL

    def cx(i: int) -> float:
        return (i - imin + 0.5) * CELL

    def cy(j: int) -> float:
        return (jmax - j + 0.5) * CELL

    def edge_x(i: int) -> float:
        return (i - imin) * CELL

    def edge_y(j: int) -> float:
        return (jmax - j + 1) * CELL

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        "<defs>"
        '<marker id="tip" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z"/></marker>'
        "</defs>",
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i in range(imin, imax + 2):
        lines.append(
            f'<line class="grid" x1="{edge_x(i)}" y1="0" x2="{edge_x(i)}" '
            f'y2="{height}" stroke="#dddddd" stroke-width="1"/>'
        )
    for j in range(jmin - 1, jmax + 1):
        lines.append(
            f'<line class="grid" x1="0" y1="{edge_y(j)}" x2="{width}" '
            f'y2="{edge_y(j)}" stroke="#dddddd" stroke-width="1"/>'
        )
    # both walls of the zero row and zero column, like a marked axis pair
    for i in (0, 1):
        lines.append(
            f'<line class="axis" x1="{edge_x(i)}" y1="0" x2="{edge_x(i)}" '
            f'y2="{height}" stroke="#555555" stroke-width="2"/>'
        )
    for j in (-1, 0):
        lines.append(
            f'<line class="axis" x1="0" y1="{edge_y(j)}" x2="{width}" '
            f'y2="{edge_y(j)}" stroke="#555555" stroke-width="2"/>'
        )
    for (x0, y0), (x1, y1) in arrows:
        sx, sy, tx, ty = cx(x0), cy(y0), cx(x1), cy(y1)
        dx, dy = tx - sx, ty - sy
        norm = (dx * dx + dy * dy) ** 0.5 or 1.0
        trim = DOT_RADIUS + 2
        lines.append(
            f'<line class="arrow" x1="{sx + dx / norm * trim:.1f}" '
            f'y1="{sy + dy / norm * trim:.1f}" '
            f'x2="{tx - dx / norm * trim:.1f}" y2="{ty - dy / norm * trim:.1f}" '
            f'stroke="black" stroke-width="1.5" marker-end="url(#tip)"/>'
        )
    for name in sorted(dots):
        i, j = dots[name]
        lines.append(
            f'<circle class="dot" cx="{cx(i)}" cy="{cy(j)}" r="{DOT_RADIUS}">'
            f"<title>{name}</title></circle>"
        )
    lines.append("</svg>")
    return "\n".join(lines)


def svg_for_staircase(stair: Staircase) -> str:
    return svg_for_complex(from_staircase(stair))
