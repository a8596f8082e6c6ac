"""Crossings, writhe, winding, corner census and the classical invariants.

Conventions
-----------
Vertical arcs pass over horizontal arcs.  Viewed from outside the cylinder,
(theta, z) is positively oriented, so a crossing has sign
``det[over; under] = -sweep(row) * (+1 if column up else -1)``.  This is the
ordinary writhe sign, under which the flip is a Legendrian isotopy.

A corner is a cusp when the theta-direction of motion reverses there.  A
horizontal arc moves in theta by its sweep; a vertical arc moves by ``+1``
when it runs down and ``-1`` when it runs up (the characteristic foliation
on ``r = r0`` has negative slope).  A cusp is "up" or "down" after its
vertical arc.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .diagram import Corner, RectDiagram, derive_verticals, require_valid

__all__ = [
    "Crossing",
    "CornerInfo",
    "InvariantReport",
    "NonGenericPositionError",
    "RotationParityError",
    "diagram_arrays",
    "crossing_matrix",
    "crossings",
    "writhe",
    "winding",
    "winding_per_gap",
    "corners",
    "corner_census",
    "thurston_bennequin",
    "rotation",
    "self_linking_plus",
    "self_linking_minus",
    "invariant_report",
]


class NonGenericPositionError(ValueError):
    pass


class RotationParityError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    row: int
    col: int
    sign: int


@dataclass(frozen=True)
class CornerInfo:
    corner: Corner
    kind: str  # "smooth", "up" or "down"

    @property
    def is_cusp(self) -> bool:
        return self.kind != "smooth"


@dataclass(frozen=True)
class InvariantReport:
    omega: int
    winding: int
    up: int
    down: int
    tb: int
    rot: int
    sl_plus: int
    sl_minus: int

    def as_dict(self) -> dict:
        return asdict(self)


def diagram_arrays(d: RectDiagram):
    """0-based ``tail, head, sweep`` per row and ``vfrom, vto`` per column."""
    require_valid(d)
    n = d.n
    tail = np.fromiter((a.tail_col - 1 for a in d.rows), np.int64, n)
    head = np.fromiter((a.head_col - 1 for a in d.rows), np.int64, n)
    sweep = np.fromiter((a.sweep for a in d.rows), np.int64, n)
    vfrom = np.empty(n, np.int64)
    vto = np.empty(n, np.int64)
    rows = np.arange(n, dtype=np.int64)
    vfrom[head] = rows
    vto[tail] = rows
    return tail, head, sweep, vfrom, vto


def crossing_matrix(d: RectDiagram) -> np.ndarray:
    return _kernels.crossing_matrix(*diagram_arrays(d))


def crossings(d: RectDiagram) -> list[Crossing]:
    m = crossing_matrix(d)
    rows, cols = np.nonzero(m)
    return [Crossing(int(i) + 1, int(c) + 1, int(m[i, c])) for i, c in zip(rows, cols)]


def writhe(d: RectDiagram) -> int:
    return int(crossing_matrix(d).sum())


def winding_per_gap(d: RectDiagram) -> np.ndarray:
    """Winding evaluated in every gap; entry ``g`` is the gap just after column ``g + 1``."""
    tail, head, sweep, _, _ = diagram_arrays(d)
    return _kernels.winding_per_gap(tail, head, sweep)


def winding(d: RectDiagram, theta_star: float | None = None) -> int:
    """Algebraic winding number around the z-axis.

    ``theta_star`` is a position in column-rank units taken mod ``n`` (column
    ``j`` sits at ``j``); it must avoid every column.  The default probes the
    cut between column ``n`` and column 1.
    """
    require_valid(d)
    n = d.n
    if theta_star is None:
        return int(winding_per_gap(d)[n - 1])
    x = float(theta_star) % n
    if x == int(x):
        raise NonGenericPositionError(f"theta_star={theta_star} coincides with a column")
    total = 0
    for a in d.rows:
        lo, hi = (a.tail_col, a.head_col) if a.sweep > 0 else (a.head_col, a.tail_col)
        off = (x - lo) % n
        if 0 < off < (hi - lo) % n:
            total += a.sweep
    return total


def corners(d: RectDiagram) -> list[CornerInfo]:
    """All ``2n`` corners with their cusp classification."""
    out = []
    for v in derive_verticals(d):
        vmotion = -1 if v.up else 1
        into = d.row(v.from_row)
        outof = d.row(v.to_row)
        for corner, hmotion in (
            (Corner(v.from_row, v.col, "h"), into.sweep),
            (Corner(v.to_row, v.col, "v"), outof.sweep),
        ):
            kind = "smooth" if hmotion == vmotion else v.dir
            out.append(CornerInfo(corner, kind))
    return out


def corner_census(d: RectDiagram) -> tuple[int, int]:
    """``(up, down)`` cusp counts."""
    up = down = 0
    for c in corners(d):
        if c.kind == "up":
            up += 1
        elif c.kind == "down":
            down += 1
    return up, down


@lru_cache(maxsize=1 << 16)
def invariant_report(d: RectDiagram) -> InvariantReport:
    omega = writhe(d)
    wind = winding(d)
    up, down = corner_census(d)
    if (up + down) % 2 or (down - up) % 2:
        raise RotationParityError(f"cusp counts up={up}, down={down} give a half-integral rotation number")
    tb = omega - (down + up) // 2
    rot = wind + (down - up) // 2
    return InvariantReport(omega, wind, up, down, tb, rot, tb - rot, tb + rot)


def thurston_bennequin(d: RectDiagram) -> int:
    return invariant_report(d).tb


def rotation(d: RectDiagram) -> int:
    return invariant_report(d).rot


def self_linking_plus(d: RectDiagram) -> int:
    """Self-linking number of the positive transverse push-off, ``tb - rot``.

    On braided diagrams this equals ``writhe - winding``; the identity is
    checked and a mismatch raises.
    """
    rep = invariant_report(d)
    if all(a.sweep > 0 for a in d.rows) and rep.sl_plus != rep.omega - rep.winding:
        raise RuntimeError(f"braided diagram with sl+={rep.sl_plus} but writhe-winding={rep.omega - rep.winding}")
    return rep.sl_plus


def self_linking_minus(d: RectDiagram) -> int:
    return invariant_report(d).sl_minus
