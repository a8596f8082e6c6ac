"""Elementary moves on rectangular diagrams.

Every move returns a new diagram; a move that does not apply raises
``MoveRejected``.  Move literals (used by the CLI and in certificates)::

    flip:<row>  hc:<row>  vc:<col>  rot:<k>
    stab:<row>,<col>,<NE|NW|SE|SW>  destab:<row>,<col>

A stabilization at corner ``(row, col)`` inserts a fresh row next to ``row``
and a fresh column next to ``col``; the quadrant names where the new notch
corner sits relative to the old corner (N = higher z, E = larger theta).
The old corner is replaced by three corners: the row now ends at the fresh
column, a short vertical joins the fresh row, and a short horizontal leads
back to the old column.  ``destab:<row>,<col>`` names that middle corner.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import HorizArc, RectDiagram, arc_support_contains, require_valid, validate
from .invariants import invariant_report

__all__ = [
    "Move",
    "MoveClass",
    "MoveRejected",
    "QUADRANTS",
    "parse_move",
    "apply_move",
    "flip",
    "h_commute",
    "v_commute",
    "stabilize",
    "stabilize_with_witness",
    "destabilize",
    "rotate_theta",
    "classify",
    "classify_delta",
    "inverse_move",
]

QUADRANTS = ("NE", "NW", "SE", "SW")


class MoveRejected(ValueError):
    pass


@dataclass(frozen=True)
class Move:
    kind: str
    args: tuple

    def __str__(self) -> str:
        if self.kind == "stab":
            r, c, q = self.args
            return f"stab:{r},{c},{q}"
        return f"{self.kind}:" + ",".join(str(a) for a in self.args)

    @classmethod
    def flip(cls, row: int) -> "Move":
        return cls("flip", (row,))

    @classmethod
    def hc(cls, row: int) -> "Move":
        return cls("hc", (row,))

    @classmethod
    def vc(cls, col: int) -> "Move":
        return cls("vc", (col,))

    @classmethod
    def rot(cls, k: int) -> "Move":
        return cls("rot", (k,))

    @classmethod
    def stab(cls, row: int, col: int, quadrant: str) -> "Move":
        return cls("stab", (row, col, quadrant))

    @classmethod
    def destab(cls, row: int, col: int) -> "Move":
        return cls("destab", (row, col))


_ARITY = {"flip": 1, "hc": 1, "vc": 1, "rot": 1, "stab": 3, "destab": 2}


def parse_move(text: str) -> Move:
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in _ARITY:
        raise ValueError(f"unknown move {text!r}; expected one of {', '.join(_ARITY)}")
    parts = [p.strip() for p in rest.split(",")]
    if len(parts) != _ARITY[kind]:
        raise ValueError(f"move {kind!r} takes {_ARITY[kind]} argument(s), got {len(parts)}")
    try:
        if kind == "stab":
            q = parts[2].upper()
            if q not in QUADRANTS:
                raise ValueError(f"quadrant must be one of {QUADRANTS}, got {parts[2]!r}")
            return Move(kind, (int(parts[0]), int(parts[1]), q))
        return Move(kind, tuple(int(p) for p in parts))
    except ValueError as exc:
        raise ValueError(f"bad move {text!r}: {exc}") from None


@dataclass(frozen=True)
class MoveClass:
    delta_tb: int
    delta_rot: int
    delta_sl_plus: int
    label: str


def _rerank(rows_pos, cols_pos):
    """Rebuild a diagram from real-valued row/column positions."""
    zr = {z: i for i, z in enumerate(sorted(p[0] for p in rows_pos), start=1)}
    cr = {c: i for i, c in enumerate(sorted(cols_pos), start=1)}
    out = sorted(
        (HorizArc(zr[z], cr[t], cr[h], s) for z, t, h, s in rows_pos),
        key=lambda a: a.z_rank,
    )
    return RectDiagram(len(out), tuple(out)), zr, cr


def _check_row(d: RectDiagram, row: int) -> None:
    if not 1 <= row <= d.n:
        raise MoveRejected(f"row {row} outside 1..{d.n}")


def _check_col(d: RectDiagram, col: int) -> None:
    if not 1 <= col <= d.n:
        raise MoveRejected(f"column {col} outside 1..{d.n}")


def flip(d: RectDiagram, z_rank: int) -> RectDiagram:
    """Replace the row's angular support by its cyclic complement (same corners)."""
    require_valid(d)
    _check_row(d, z_rank)
    rows = list(d.rows)
    a = rows[z_rank - 1]
    rows[z_rank - 1] = HorizArc(a.z_rank, a.tail_col, a.head_col, -a.sweep)
    return require_valid(RectDiagram(d.n, tuple(rows)))


def _inside_count(a: HorizArc, b: HorizArc, n: int) -> int:
    return sum(arc_support_contains(a, n, c) for c in (b.tail_col, b.head_col))


def h_commute(d: RectDiagram, z_rank: int) -> RectDiagram:
    """Exchange rows ``z_rank`` and ``z_rank + 1`` when their supports do not interleave."""
    require_valid(d)
    if not 1 <= z_rank < d.n:
        raise MoveRejected(f"hc needs 1 <= row < {d.n}, got {z_rank}")
    a, b = d.rows[z_rank - 1], d.rows[z_rank]
    if len({a.tail_col, a.head_col, b.tail_col, b.head_col}) < 4:
        raise MoveRejected(f"rows {z_rank},{z_rank + 1} share a column")
    # endpoints of one arc inside the other: (0,0) disjoint, (2,0)/(0,2) nested,
    # (1,1) interleaved, (2,2) the arcs overlap at both ends
    counts = (_inside_count(a, b, d.n), _inside_count(b, a, d.n))
    if counts not in ((0, 0), (2, 0), (0, 2)):
        raise MoveRejected(f"rows {z_rank},{z_rank + 1} have interleaved supports")
    rows = list(d.rows)
    rows[z_rank - 1] = HorizArc(z_rank, b.tail_col, b.head_col, b.sweep)
    rows[z_rank] = HorizArc(z_rank + 1, a.tail_col, a.head_col, a.sweep)
    return require_valid(RectDiagram(d.n, tuple(rows)))


def v_commute(d: RectDiagram, col: int) -> RectDiagram:
    """Exchange columns ``col`` and ``col + 1`` (mod n) when their vertical supports do not interleave."""
    require_valid(d)
    _check_col(d, col)
    n = d.n
    other = col % n + 1
    a = (d.row_with_head(col), d.row_with_tail(col))
    b = (d.row_with_head(other), d.row_with_tail(other))
    if len(set(a + b)) < 4:
        raise MoveRejected(f"columns {col},{other} share a row")
    alo, ahi = min(a), max(a)
    blo, bhi = min(b), max(b)
    disjoint = ahi < blo or bhi < alo
    nested = (alo < blo and bhi < ahi) or (blo < alo and ahi < bhi)
    if not (disjoint or nested):
        raise MoveRejected(f"columns {col},{other} have interleaved supports")
    swap = {col: other, other: col}
    rows = tuple(
        HorizArc(r.z_rank, swap.get(r.tail_col, r.tail_col), swap.get(r.head_col, r.head_col), r.sweep)
        for r in d.rows
    )
    return require_valid(RectDiagram(n, rows))


def rotate_theta(d: RectDiagram, k: int) -> RectDiagram:
    """Shift every column rank by ``k`` (mod n); a rotation about the z-axis."""
    require_valid(d)
    n = d.n
    if not 0 <= k < n:
        raise MoveRejected(f"rotation needs 0 <= k < {n}, got {k}")
    rows = tuple(
        HorizArc(a.z_rank, (a.tail_col - 1 + k) % n + 1, (a.head_col - 1 + k) % n + 1, a.sweep)
        for a in d.rows
    )
    return RectDiagram(n, rows)


def stabilize_with_witness(d: RectDiagram, row: int, col: int, quadrant: str):
    """Stabilize and also return the ``(row, col)`` of the new notch corner."""
    require_valid(d)
    _check_row(d, row)
    _check_col(d, col)
    quadrant = quadrant.upper()
    if quadrant not in QUADRANTS:
        raise MoveRejected(f"unknown quadrant {quadrant!r}")
    arc = d.rows[row - 1]
    if col not in (arc.tail_col, arc.head_col):
        raise MoveRejected(f"no corner at row {row}, column {col}")
    zn = row + (0.5 if quadrant[0] == "N" else -0.5)
    cn = col + (0.5 if quadrant[1] == "E" else -0.5)
    rows_pos = [(a.z_rank, a.tail_col, a.head_col, a.sweep) for a in d.rows]
    if arc.head_col == col:
        rows_pos[row - 1] = (row, arc.tail_col, cn, arc.sweep)
        tail, head = cn, col
    else:
        rows_pos[row - 1] = (row, cn, arc.head_col, arc.sweep)
        tail, head = col, cn
    rows_pos.append((zn, tail, head, 1 if head > tail else -1))
    out, zr, cr = _rerank(rows_pos, list(range(1, d.n + 1)) + [cn])
    return require_valid(out), (zr[zn], cr[cn])


def stabilize(d: RectDiagram, row: int, col: int, quadrant: str) -> RectDiagram:
    return stabilize_with_witness(d, row, col, quadrant)[0]


def _notch(d: RectDiagram, row: int, col: int):
    """Locate the notch whose middle corner is ``(row, col)``.

    Returns ``(outer_row, outer_col)``: the row joined by the short vertical
    and the column joined by the short horizontal.
    """
    n = d.n
    if n < 3:
        raise MoveRejected("no notch in a diagram with fewer than 3 rows")
    _check_row(d, row)
    _check_col(d, col)
    short = d.rows[row - 1]
    if col not in (short.tail_col, short.head_col):
        raise MoveRejected(f"no corner at row {row}, column {col}")
    other_col = short.head_col if short.tail_col == col else short.tail_col
    if short.extent(n) != 1:
        raise MoveRejected(f"row {row} is not a unit-length arc")
    ends = (d.row_with_head(col), d.row_with_tail(col))
    other_row = ends[1] if ends[0] == row else ends[0]
    if abs(other_row - row) != 1:
        raise MoveRejected(f"column {col} is not a unit-length vertical")
    return other_row, other_col


def destabilize(d: RectDiagram, row: int, col: int) -> RectDiagram:
    """Collapse the notch whose middle corner is ``(row, col)``."""
    require_valid(d)
    outer_row, outer_col = _notch(d, row, col)
    rows_pos = []
    for a in d.rows:
        if a.z_rank == row:
            continue
        t = outer_col if a.tail_col == col else a.tail_col
        h = outer_col if a.head_col == col else a.head_col
        rows_pos.append((a.z_rank, t, h, a.sweep))
    cols = [c for c in range(1, d.n + 1) if c != col]
    out, _, _ = _rerank(rows_pos, cols)
    report = validate(out)
    if not report.ok:
        raise MoveRejected(f"collapsing the notch at ({row},{col}) leaves an invalid diagram: {report}")
    return out


def apply_move(d: RectDiagram, m: Move) -> RectDiagram:
    try:
        if m.kind == "flip":
            return flip(d, *m.args)
        if m.kind == "hc":
            return h_commute(d, *m.args)
        if m.kind == "vc":
            return v_commute(d, *m.args)
        if m.kind == "rot":
            return rotate_theta(d, *m.args)
        if m.kind == "stab":
            return stabilize(d, *m.args)
        if m.kind == "destab":
            return destabilize(d, *m.args)
    except (KeyError, IndexError) as exc:
        raise MoveRejected(f"{m} does not apply: {exc}") from None
    raise MoveRejected(f"unknown move kind {m.kind!r}")


def _label(dtb: int, drot: int, dsl: int) -> str:
    if dtb == 0 and drot == 0:
        return "legendrian"
    if dsl == 0 and (dtb, drot) in ((-1, -1), (1, 1)):
        return "transverse_plus"
    return "topological"


def classify_delta(before: RectDiagram, after: RectDiagram) -> MoveClass:
    a = invariant_report(before)
    b = invariant_report(after)
    dtb, drot, dsl = b.tb - a.tb, b.rot - a.rot, b.sl_plus - a.sl_plus
    return MoveClass(dtb, drot, dsl, _label(dtb, drot, dsl))


def classify(d: RectDiagram, m: Move) -> MoveClass:
    """Effect of ``m`` on (tb, rot, sl+), computed by applying it."""
    return classify_delta(d, apply_move(d, m))


def _align_rotation(candidate: RectDiagram, target: RectDiagram) -> int:
    for k in range(target.n):
        if rotate_theta(candidate, k) == target:
            return k
    raise RuntimeError("inverse construction does not match up to rotation")


def inverse_move(d: RectDiagram, m: Move) -> tuple[Move, ...]:
    """Moves that take ``apply_move(d, m)`` back to ``d`` exactly."""
    after = apply_move(d, m)
    if m.kind in ("flip", "hc", "vc"):
        return (m,)
    if m.kind == "rot":
        k = m.args[0]
        return () if k == 0 else (Move.rot(d.n - k),)
    if m.kind == "stab":
        _, witness = stabilize_with_witness(d, *m.args)
        return (Move.destab(*witness),)
    # destab: rebuild the notch on the collapsed diagram
    row, col = m.args
    outer_row, outer_col = _notch(d, row, col)
    vert = "N" if row > outer_row else "S"
    horiz = "E" if col == outer_col % d.n + 1 else "W"
    new_row = outer_row - (1 if outer_row > row else 0)
    new_col = outer_col - (1 if outer_col > col else 0)
    stab = Move.stab(new_row, new_col, vert + horiz)
    k = _align_rotation(apply_move(after, stab), d)
    return (stab,) if k == 0 else (stab, Move.rot(k))
