"""SVG and ASCII pictures of a diagram on the cylinder cut open at theta = 0.

Column ``j`` is drawn at ``x = j`` and the cut sits at both side edges
(``x = 1/2`` and ``x = n + 1/2``).  Vertical arcs pass over horizontal arcs,
so horizontal strokes are broken around every crossing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import RectDiagram, derive_verticals, require_valid, row_wraps
from .invariants import crossings

__all__ = ["RenderOptions", "render_svg", "render_ascii"]


@dataclass(frozen=True)
class RenderOptions:
    cell: int = 40
    margin: int = 30
    gap: int = 6  # half-width of the break around a crossing
    labels: bool = True


def _row_intervals(a, n: int) -> list[tuple[float, float]]:
    """Support of a row in drawing coordinates, split at the cut."""
    lo, hi = (a.tail_col, a.head_col) if a.sweep > 0 else (a.head_col, a.tail_col)
    if lo < hi:
        return [(lo, hi)]
    return [(lo, n + 0.5), (0.5, hi)]


def render_svg(d: RectDiagram, options: RenderOptions | None = None) -> str:
    require_valid(d)
    o = options or RenderOptions()
    n = d.n
    width = n * o.cell + 2 * o.margin
    height = n * o.cell + 2 * o.margin

    def X(col: float) -> float:
        return o.margin + (col - 0.5) * o.cell

    def Y(row: float) -> float:
        return o.margin + (n + 0.5 - row) * o.cell

    cross_cols: dict[int, list[int]] = {}
    for c in crossings(d):
        cross_cols.setdefault(c.row, []).append(c.col)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect class="cut" x="{X(0.5):g}" y="{Y(n + 0.5):g}" width="{n * o.cell}" height="{n * o.cell}" '
        'fill="none" stroke="#bbb" stroke-dasharray="4 4"/>',
    ]
    for a in d.rows:
        gaps = sorted(cross_cols.get(a.z_rank, []))
        subpaths = []
        for lo, hi in _row_intervals(a, n):
            cuts = [c for c in gaps if lo < c < hi]
            xs = [X(lo)]
            for c in cuts:
                xs += [X(c) - o.gap, X(c) + o.gap]
            xs.append(X(hi))
            for x0, x1 in zip(xs[::2], xs[1::2]):
                subpaths.append(f"M {x0:g} {Y(a.z_rank):g} H {x1:g}")
        out.append(
            f'<path class="h" data-row="{a.z_rank}" data-gaps="{len(gaps)}" data-sweep="{"+" if a.sweep > 0 else "-"}" '
            f'd="{" ".join(subpaths)}" fill="none" stroke="black" stroke-width="2"/>'
        )
        if row_wraps(a, n):
            y = Y(a.z_rank)
            out.append(
                f'<path class="wrap" data-row="{a.z_rank}" '
                f'd="M {X(0.5) - 5:g} {y - 5:g} l 10 10 M {X(n + 0.5) - 5:g} {y - 5:g} l 10 10" '
                'stroke="#c00" stroke-width="2"/>'
            )
    for v in derive_verticals(d):
        out.append(
            f'<line class="v" data-col="{v.col}" x1="{X(v.col):g}" y1="{Y(v.from_row):g}" '
            f'x2="{X(v.col):g}" y2="{Y(v.to_row):g}" stroke="black" stroke-width="2"/>'
        )
    if o.labels:
        for j in range(1, n + 1):
            out.append(f'<text class="label" x="{X(j):g}" y="{height - 8}" text-anchor="middle" font-size="11">{j}</text>')
        for i in range(1, n + 1):
            out.append(f'<text class="label" x="8" y="{Y(i) + 4:g}" font-size="11">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(d: RectDiagram) -> str:
    """Character grid, top row first.  ``|`` over ``-`` at crossings, ``~`` marks the cut."""
    require_valid(d)
    n = d.n
    w = 4 * n + 1
    grid = [[" "] * w for _ in range(2 * n - 1)]

    def cx(col: int) -> int:
        return 4 * col - 2

    def ry(row: int) -> int:
        return 2 * (n - row)

    for a in d.rows:
        y = ry(a.z_rank)
        for lo, hi in _row_intervals(a, n):
            x0 = 0 if lo == 0.5 else cx(int(lo))
            x1 = w - 1 if hi == n + 0.5 else cx(int(hi))
            for x in range(x0, x1 + 1):
                grid[y][x] = "-"
            if lo == 0.5:
                grid[y][0] = "~"
            if hi == n + 0.5:
                grid[y][w - 1] = "~"
        mid = cx(a.head_col) - 1 if a.sweep > 0 else cx(a.head_col) + 1
        if 0 < mid < w - 1:
            grid[y][mid] = ">" if a.sweep > 0 else "<"
    for v in derive_verticals(d):
        lo, hi = v.support
        x = cx(v.col)
        for y in range(ry(hi), ry(lo) + 1):
            grid[y][x] = "|"
        grid[ry(v.from_row)][x] = "+"
        grid[ry(v.to_row)][x] = "+"
        arrow_y = (ry(v.from_row) + ry(v.to_row)) // 2
        if abs(v.to_row - v.from_row) == 1:
            arrow_y = None
        if arrow_y is not None and grid[arrow_y][x] == "|":
            grid[arrow_y][x] = "^" if v.up else "v"
    return "\n".join("".join(line).rstrip() for line in grid) + "\n"
