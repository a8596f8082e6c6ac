"""Piecewise-Legendrian realization of rectangular diagrams in (R^3, xi_sym).

xi_sym is the kernel of ``alpha = dz + r^2 dtheta = dz + x dy - y dx``.  On a
cylinder ``r = r0`` its characteristic foliation is the family of helices
``dz/dtheta = -r0^2``.  A diagram is realized as follows:

* row ``i`` becomes a helix arc on ``r = r1`` around level ``z = i``
  (near-horizontal);
* column ``j`` becomes a helix arc on ``r = r2`` around angle
  ``theta = 2*pi*(j - 1/2)/n`` (near-vertical);
* the two meet through a radial segment at constant ``(theta, z)``, placed at
  the exact intersection of the two helices.  Every radial connector is
  sampled as two pieces, ``r1 -> 1`` and ``1 -> r2``.

Each of these pieces is tangent to xi_sym, so the discrete residual is zero
up to rounding.

The curve keeps its construction samples together with the accumulated
translation ``K`` of ``f_K(x, y, z) = (x + K, y + K, z + K(x - y))``.  Since
``f_K`` preserves alpha and ``f_a o f_b = f_{a+b}``, shifting only updates
``K``.  The residual of a segment is alpha evaluated on the pushed-forward
midpoint tangent, divided by the length of the image chord.
"""

from __future__ import annotations

import csv
import io as _io
import math
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .diagram import RectDiagram, component_rows, require_valid, row_wraps
from .invariants import corners

__all__ = [
    "TAGS",
    "LegendrianCurve",
    "ContactReport",
    "EmbeddingError",
    "WrappingDiagramError",
    "embed",
    "contact_residual",
    "half_space_map",
    "half_space_shift",
    "diagram_from_curve",
    "curve_to_csv",
    "FrontVertex",
    "FrontPolyline",
    "front_from_diagram",
    "diagram_from_front",
    "front_to_svg",
]

TAGS = ("near_horizontal", "near_vertical", "radial")
TWO_PI = 2.0 * math.pi


class EmbeddingError(ValueError):
    pass


class WrappingDiagramError(ValueError):
    pass


def half_space_map(xyz, K: float) -> np.ndarray:
    """``(x, y, z) -> (x + K, y + K, z + K(x - y))`` on an ``(..., 3)`` array."""
    p = np.asarray(xyz, dtype=float)
    x, y, z = p[..., 0], p[..., 1], p[..., 2]
    return np.stack([x + K, y + K, z + K * (x - y)], axis=-1)


def _to_cartesian(cyl: np.ndarray) -> np.ndarray:
    r, th, z = cyl[:, 0], cyl[:, 1], cyl[:, 2]
    return np.column_stack([r * np.cos(th), r * np.sin(th), z])


def _to_cylindrical(xyz: np.ndarray) -> np.ndarray:
    x, y, z = xyz[:, 0], xyz[:, 1], xyz[:, 2]
    return np.column_stack([np.hypot(x, y), np.arctan2(y, x), z])


@dataclass(frozen=True)
class LegendrianCurve:
    """Sampled curve.

    ``base`` holds the construction samples ``(r, theta, z)`` before the
    translation ``shift``; ``pieces`` are inclusive sample ranges
    ``(start, stop, tag)`` sharing endpoints with their neighbours;
    ``components`` are inclusive sample ranges, one per link component.  A
    closed component ends at its first sample (theta differs by a multiple
    of 2*pi).
    """

    base: np.ndarray
    pieces: tuple[tuple[int, int, str], ...]
    components: tuple[tuple[int, int], ...]
    closed: bool
    shift: float = 0.0
    r1: float | None = None
    r2: float | None = None

    @classmethod
    def from_samples(cls, samples, tag: str = "radial", closed: bool = False) -> "LegendrianCurve":
        """A single-piece curve from explicit ``(r, theta, z)`` samples."""
        base = np.asarray(samples, dtype=float)
        if base.ndim != 2 or base.shape[1] != 3 or len(base) < 2:
            raise ValueError("need an (m, 3) array of at least two samples")
        if tag not in TAGS:
            raise ValueError(f"tag must be one of {TAGS}")
        m = len(base) - 1
        return cls(base, ((0, m, tag),), ((0, m),), closed)

    @property
    def seg_start(self) -> np.ndarray:
        return np.concatenate([np.arange(a, b, dtype=np.int64) for a, b, _ in self.pieces])

    @property
    def seg_tags(self) -> list[str]:
        return [t for a, b, t in self.pieces for _ in range(a, b)]

    @property
    def sample_tags(self) -> list[str]:
        """Tag of the piece leaving each sample (the last sample takes its incoming piece)."""
        tags = [""] * len(self.base)
        for a, b, t in reversed(self.pieces):
            for i in range(a, b + 1):
                tags[i] = t
        for a, b, t in self.pieces:
            tags[a] = t
        return tags

    @property
    def cartesian(self) -> np.ndarray:
        """Image samples ``f_K(x, y, z)``."""
        return half_space_map(_to_cartesian(self.base), self.shift)

    @property
    def samples(self) -> np.ndarray:
        """Image samples in cylindrical coordinates, theta unwrapped per component."""
        cyl = _to_cylindrical(self.cartesian)
        for a, b in self.components:
            cyl[a : b + 1, 1] = np.unwrap(cyl[a : b + 1, 1])
        return cyl

    def count(self, tag: str) -> int:
        return sum(1 for *_, t in self.pieces if t == tag)


@dataclass(frozen=True)
class ContactReport:
    max_residual: float
    by_tag: dict
    per_segment: np.ndarray

    def as_dict(self) -> dict:
        return {"max_residual": self.max_residual, "by_tag": dict(self.by_tag)}


def contact_residual(c: LegendrianCurve) -> ContactReport:
    if len(c.base) < 2:
        raise ValueError("need at least two samples")
    res = _kernels.segment_residuals(c.base, c.seg_start, c.shift)
    tags = np.array(c.seg_tags)
    by_tag = {t: float(res[tags == t].max()) for t in TAGS if np.any(tags == t)}
    return ContactReport(float(res.max()), by_tag, res)


def half_space_shift(c: LegendrianCurve, K: float) -> LegendrianCurve:
    """Apply ``f_K``; for ``K`` larger than ``max(|x|, |y|)`` the image lies in ``y > 0``."""
    return replace(c, shift=c.shift + float(K))


def _level_theta(j: int, n: int) -> float:
    return TWO_PI * (j - 0.5) / n


def embed(d: RectDiagram, r1: float = 0.1, r2: float = 10.0, samples_per_arc: int = 64) -> LegendrianCurve:
    """Realize ``d`` as a closed piecewise-Legendrian curve."""
    require_valid(d)
    if not 0 < r1 < r2:
        raise EmbeddingError(f"need 0 < r1 < r2, got r1={r1}, r2={r2}")
    if samples_per_arc < 2:
        raise EmbeddingError("samples_per_arc must be at least 2")
    n = d.n
    a1, a2 = r1 * r1, r2 * r2
    step = TWO_PI / n

    # unwrapped tail/head angles per row, and the row's helix parameter
    row_t, row_h, row_mid = {}, {}, {}
    for a in d.rows:
        t = _level_theta(a.tail_col, n)
        h = t + a.sweep * a.extent(n) * step
        row_t[a.z_rank], row_h[a.z_rank], row_mid[a.z_rank] = t, h, 0.5 * (t + h)
    col_mid = {c: 0.5 * (d.row_with_head(c) + d.row_with_tail(c)) for c in range(1, n + 1)}

    def corner(row: int, col: int, theta_u: float) -> tuple[float, float]:
        # intersection of z = row - a1 (theta - mid) and theta = theta_u - (z - zm) / a2
        zm = col_mid[col]
        th = (theta_u - (row + a1 * row_mid[row] - zm) / a2) / (1.0 - a1 / a2)
        return th, row - a1 * (th - row_mid[row])

    corner_at = {}
    for a in d.rows:
        corner_at[(a.z_rank, a.tail_col)] = corner(a.z_rank, a.tail_col, row_t[a.z_rank])
        corner_at[(a.z_rank, a.head_col)] = corner(a.z_rank, a.head_col, row_h[a.z_rank])

    # horizontal/vertical disjointness
    zr = sorted((min(corner_at[(a.z_rank, a.tail_col)][1], corner_at[(a.z_rank, a.head_col)][1]),
                 max(corner_at[(a.z_rank, a.tail_col)][1], corner_at[(a.z_rank, a.head_col)][1]))
                for a in d.rows)
    if any(lo2 <= hi1 for (_, hi1), (lo2, _) in zip(zr, zr[1:])):
        raise EmbeddingError(f"r1={r1} too large: near-horizontal arcs overlap in z")
    half_widths = []
    for c in range(1, n + 1):
        t1 = corner_at[(d.row_with_head(c), c)][0]
        t2 = corner_at[(d.row_with_tail(c), c)][0]
        spread = [(t - _level_theta(c, n) + math.pi) % TWO_PI - math.pi for t in (t1, t2)]
        half_widths.append(max(abs(s) for s in spread))
    if max(half_widths) >= step / 2:
        hint = math.sqrt(max(half_widths) * a2 / (step / 4))
        raise EmbeddingError(f"r2={r2} too small: near-vertical arcs overlap in theta (try r2 >= {hint:.3g})")

    m = samples_per_arc
    s = np.linspace(0.0, 1.0, m)

    def radial(th: float, z: float, r_from: float, r_to: float):
        for lo, hi in ((r_from, 1.0), (1.0, r_to)):
            yield np.column_stack([lo + (hi - lo) * s, np.full(m, th), np.full(m, z)]), "radial"

    def component_pieces(comp):
        for row in comp:
            a = d.row(row)
            t0, _ = corner_at[(row, a.tail_col)]
            t1, z1 = corner_at[(row, a.head_col)]
            th = t0 + (t1 - t0) * s
            yield np.column_stack([np.full(m, r1), th, row - a1 * (th - row_mid[row])]), "near_horizontal"
            yield from radial(t1, z1, r1, r2)
            col = a.head_col
            t2, z2 = corner_at[(d.row_with_tail(col), col)]
            z = z1 + (z2 - z1) * s
            theta = _level_theta(col, n) - (z - col_mid[col]) / a2
            yield np.column_stack([np.full(m, r2), theta, z]), "near_vertical"
            yield from radial(t2, z2, r2, r1)

    chunks: list[np.ndarray] = []
    pieces: list[tuple[int, int, str]] = []
    comps: list[tuple[int, int]] = []
    cursor = 0
    for comp in component_rows(d):
        comp_start = cursor
        prev = None
        for arr, tag in component_pieces(comp):
            if prev is not None:
                # move onto the previous endpoint's 2*pi branch and share that sample
                arr = arr.copy()
                arr[:, 1] += round((prev[1] - arr[0, 1]) / TWO_PI) * TWO_PI
                arr = arr[1:]
                start = cursor - 1
            else:
                start = cursor
            chunks.append(arr)
            cursor += len(arr)
            pieces.append((start, cursor - 1, tag))
            prev = arr[-1]
        comps.append((comp_start, cursor - 1))
    return LegendrianCurve(np.concatenate(chunks), tuple(pieces), tuple(comps), True, 0.0, r1, r2)


def diagram_from_curve(c: LegendrianCurve) -> RectDiagram:
    """Read a diagram back from the curve's tagged pieces (undoing any shift)."""
    base = _to_cylindrical(half_space_map(c.cartesian, -c.shift))
    rows = []  # (z level, tail key, head key, sweep)
    col_theta = {}
    for a, b in c.components:
        own = [p for p in c.pieces if a <= p[0] and p[1] <= b]
        verts = [i for i, p in enumerate(own) if p[2] == "near_vertical"]
        for i, (p0, p1, tag) in enumerate(own):
            if tag == "near_vertical":
                th = np.unwrap(base[p0 : p1 + 1, 1])
                col_theta[(a, i)] = float(np.mean(th)) % TWO_PI
            elif tag == "near_horizontal":
                th = np.unwrap(base[p0 : p1 + 1, 1])
                before = max((v for v in verts if v < i), default=verts[-1])
                after = min((v for v in verts if v > i), default=verts[0])
                sweep = 1 if th[-1] > th[0] else -1
                rows.append((float(np.mean(base[p0 : p1 + 1, 2])), (a, before), (a, after), sweep))
    zr = {z: k for k, z in enumerate(sorted(r[0] for r in rows), start=1)}
    cr = {key: k for k, key in enumerate(sorted(col_theta, key=col_theta.get), start=1)}
    triples = [(cr[t], cr[h], s) for z, t, h, s in sorted(rows)]
    return require_valid(RectDiagram.from_rows(triples))


def curve_to_csv(c: LegendrianCurve) -> str:
    """Image samples as CSV with header ``r,theta,z,tag``."""
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "theta", "z", "tag"])
    for (r, th, z), tag in zip(c.samples, c.sample_tags):
        w.writerow([repr(float(r)), repr(float(th)), repr(float(z)), tag])
    return buf.getvalue()


# ---------------------------------------------------------------- fronts


@dataclass(frozen=True)
class FrontVertex:
    x: int
    y: int
    cusp: str | None = None  # "up", "down" or None


@dataclass(frozen=True)
class FrontPolyline:
    """Rectilinear front: closed polygons whose vertices are the diagram corners.

    A diagram corner at ``(row, col)`` maps to ``x = col - row``,
    ``y = col + row`` (a 45 degree turn), so x reverses exactly at cusps.
    """

    components: tuple[tuple[FrontVertex, ...], ...]

    @property
    def cusps(self) -> list[FrontVertex]:
        return [v for comp in self.components for v in comp if v.cusp]


def front_from_diagram(d: RectDiagram) -> FrontPolyline:
    require_valid(d)
    wrapping = [a.z_rank for a in d.rows if row_wraps(a, d.n)]
    if wrapping:
        raise WrappingDiagramError(
            f"rows {wrapping} wrap past theta = 0; apply a theta rotation (rot:k) that clears the cut first"
        )
    kind = {(ci.corner.row, ci.corner.col): ci.kind for ci in corners(d)}
    comps = []
    for comp in component_rows(d):
        verts = []
        for row in comp:
            a = d.row(row)
            for col in (a.tail_col, a.head_col):
                k = kind[(row, col)]
                verts.append(FrontVertex(col - row, col + row, None if k == "smooth" else k))
        comps.append(tuple(verts))
    return FrontPolyline(tuple(comps))


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def diagram_from_front(f: FrontPolyline) -> RectDiagram:
    """Inverse of ``front_from_diagram`` up to rank relabeling; checks the cusp marks."""
    rows = []
    for comp in f.components:
        m = len(comp)
        if m < 4 or m % 2:
            raise ValueError("each front component needs an even number (>= 4) of vertices")
        for i, v in enumerate(comp):
            prev, nxt = comp[i - 1], comp[(i + 1) % m]
            dx_in, dx_out = v.x - prev.x, nxt.x - v.x
            reverses = _sign(dx_in) != _sign(dx_out)
            if reverses != (v.cusp is not None):
                raise ValueError(f"vertex {i} cusp mark disagrees with the front's x-direction")
        for i in range(0, m, 2):
            p, q = comp[i], comp[i + 1]
            dx, dy = q.x - p.x, q.y - p.y
            if dx != dy or dx == 0:
                raise ValueError(f"edge {i} is not a horizontal (slope +1) front edge")
            if (p.x + p.y) % 2 or (q.x + q.y) % 2:
                raise ValueError("front vertices must have x + y even")
            rows.append(((p.y - p.x) // 2, (p.x + p.y) // 2, (q.x + q.y) // 2))
    zr = {z: k for k, z in enumerate(sorted(r[0] for r in rows), start=1)}
    cr = {c: k for k, c in enumerate(sorted({r[1] for r in rows} | {r[2] for r in rows}), start=1)}
    triples = [(cr[t], cr[h], 1 if h > t else -1) for z, t, h in sorted(rows)]
    return require_valid(RectDiagram.from_rows(triples))


def front_to_svg(f: FrontPolyline, scale: int = 30, margin: int = 20) -> str:
    xs = [v.x for comp in f.components for v in comp]
    ys = [v.y for comp in f.components for v in comp]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0) * scale + 2 * margin
    height = (y1 - min(ys)) * scale + 2 * margin

    def pt(v: FrontVertex) -> tuple[int, int]:
        return margin + (v.x - x0) * scale, margin + (y1 - v.y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for comp in f.components:
        d = " ".join(("M" if i == 0 else "L") + " %d %d" % pt(v) for i, v in enumerate(comp)) + " Z"
        out.append(f'<path class="front" d="{d}" fill="none" stroke="black" stroke-width="2"/>')
    for v in f.cusps:
        x, y = pt(v)
        out.append(f'<circle class="cusp {v.cusp}" cx="{x}" cy="{y}" r="4" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
