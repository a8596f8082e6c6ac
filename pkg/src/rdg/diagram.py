"""Rectangular diagrams on the cylinder C1.

A diagram of grid size ``n`` has ``n`` horizontal arcs, one per z-rank, and
``n`` vertical arcs, one per theta-rank.  Only the horizontal arcs are stored;
each records the theta-ranks of its two corners (``tail_col`` -> ``head_col``
in link orientation) and the direction in which it sweeps around the
cylinder.  Vertical arcs are recovered from the corners.

Theta is cyclic: the cut ``theta = 0`` sits in the gap between column ``n``
and column 1, so an arc whose support contains that gap *wraps*.  z is linear.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "HorizArc",
    "VertArc",
    "Corner",
    "RectDiagram",
    "Violation",
    "ValidationReport",
    "InvalidDiagramError",
    "validate",
    "require_valid",
    "derive_verticals",
    "is_braided",
    "components",
    "component_rows",
    "canonicalize",
    "arc_support_contains",
    "row_wraps",
    "mirror",
    "reverse",
]


def _sweep_char(sweep: int) -> str:
    return "+" if sweep > 0 else "-"


@dataclass(frozen=True)
class HorizArc:
    z_rank: int
    tail_col: int
    head_col: int
    sweep: int  # +1 follows +theta, -1 follows -theta

    @property
    def forward(self) -> bool:
        return self.sweep > 0

    def extent(self, n: int) -> int:
        """Number of column steps covered, in ``1..n-1`` for a valid arc."""
        return ((self.head_col - self.tail_col) * self.sweep) % n


@dataclass(frozen=True)
class VertArc:
    col: int
    from_row: int
    to_row: int

    @property
    def up(self) -> bool:
        return self.to_row > self.from_row

    @property
    def dir(self) -> str:
        return "up" if self.up else "down"

    @property
    def support(self) -> tuple[int, int]:
        return (min(self.from_row, self.to_row), max(self.from_row, self.to_row))


@dataclass(frozen=True)
class Corner:
    """Meeting point of a horizontal and a vertical arc.

    ``incoming`` is ``"h"`` when the link arrives along the row and leaves
    along the column, ``"v"`` for the opposite order.
    """

    row: int
    col: int
    incoming: str

    @property
    def outgoing(self) -> str:
        return "v" if self.incoming == "h" else "h"


@dataclass(frozen=True)
class RectDiagram:
    n: int
    rows: tuple[HorizArc, ...]

    @classmethod
    def from_rows(cls, triples: Iterable[Sequence]) -> "RectDiagram":
        """Build from ``(tail, head, sweep)`` triples listed by ascending z-rank.

        ``sweep`` may be ``+1``/``-1`` or ``"+"``/``"-"``.
        """
        rows = []
        for z, (tail, head, sweep) in enumerate(triples, start=1):
            if isinstance(sweep, str):
                sweep = 1 if sweep == "+" else -1
            rows.append(HorizArc(z, int(tail), int(head), int(sweep)))
        return cls(len(rows), tuple(rows))

    def row(self, z_rank: int) -> HorizArc:
        arc = self.rows[z_rank - 1]
        if arc.z_rank != z_rank:
            raise InvalidDiagramError(validate(self))
        return arc

    def triples(self) -> list[tuple[int, int, int]]:
        return [(a.tail_col, a.head_col, a.sweep) for a in self.rows]

    def __iter__(self) -> Iterator[HorizArc]:
        return iter(self.rows)

    def __str__(self) -> str:
        body = " ".join(f"{a.tail_col}{_sweep_char(a.sweep)}{a.head_col}" for a in self.rows)
        return f"RectDiagram(n={self.n}: {body})"

    @cached_property
    def _tables(self) -> tuple[dict[int, int], dict[int, int]]:
        tail_row = {a.tail_col: a.z_rank for a in self.rows}
        head_row = {a.head_col: a.z_rank for a in self.rows}
        return tail_row, head_row

    def row_with_tail(self, col: int) -> int:
        return self._tables[0][col]

    def row_with_head(self, col: int) -> int:
        return self._tables[1][col]


@dataclass(frozen=True)
class Violation:
    axiom: int
    message: str

    def __str__(self) -> str:
        return f"axiom ({self.axiom}): {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def axioms(self) -> set[int]:
        return {v.axiom for v in self.violations}

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


class InvalidDiagramError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"invalid rectangular diagram: {report}")


def validate(d: RectDiagram) -> ValidationReport:
    """Check the arc-presentation axioms; never raises.

    Axiom numbering: (1) oriented horizontal arcs, (2) vertical arcs,
    (3) corners pair up, (4) distinct levels, (5) consistent orientation.
    """
    out: list[Violation] = []
    n = d.n
    if not isinstance(n, int) or n < 1:
        out.append(Violation(4, f"grid size must be a positive integer, got {n!r}"))
        return ValidationReport(out)
    if len(d.rows) != n:
        out.append(Violation(4, f"expected {n} horizontal arcs, found {len(d.rows)}"))

    z_counts = Counter(a.z_rank for a in d.rows)
    for z, k in sorted(z_counts.items()):
        if not 1 <= z <= n:
            out.append(Violation(4, f"z-rank {z} outside 1..{n}"))
        if k > 1:
            out.append(Violation(4, f"z-rank {z} used by {k} horizontal arcs"))
    for i, a in enumerate(d.rows, start=1):
        if z_counts[a.z_rank] == 1 and a.z_rank != i:
            out.append(Violation(4, f"arc at position {i} carries z-rank {a.z_rank}"))

    tails: Counter[int] = Counter()
    heads: Counter[int] = Counter()
    for a in d.rows:
        bad_range = False
        for name, c in (("tail", a.tail_col), ("head", a.head_col)):
            if not 1 <= c <= n:
                out.append(Violation(3, f"row {a.z_rank}: {name} column {c} outside 1..{n}"))
                bad_range = True
        if a.sweep not in (1, -1):
            out.append(Violation(1, f"row {a.z_rank}: sweep must be + or -, got {a.sweep!r}"))
        if a.tail_col == a.head_col:
            out.append(Violation(1, f"row {a.z_rank}: tail and head share column {a.tail_col}"))
        if not bad_range:
            tails[a.tail_col] += 1
            heads[a.head_col] += 1

    for c in range(1, n + 1):
        uses = tails[c] + heads[c]
        if uses != 2:
            out.append(Violation(3, f"column {c} meets {uses} corners, expected 2"))
        if tails[c] != 1 or heads[c] != 1:
            out.append(Violation(5, f"column {c} has {tails[c]} tails and {heads[c]} heads"))
    return ValidationReport(out)


def require_valid(d: RectDiagram) -> RectDiagram:
    report = validate(d)
    if not report.ok:
        raise InvalidDiagramError(report)
    return d


def derive_verticals(d: RectDiagram) -> list[VertArc]:
    """One vertical arc per column, oriented from the row ending there to the row starting there."""
    require_valid(d)
    return [VertArc(c, d.row_with_head(c), d.row_with_tail(c)) for c in range(1, d.n + 1)]


def is_braided(d: RectDiagram) -> bool:
    require_valid(d)
    return all(a.sweep > 0 for a in d.rows)


def component_rows(d: RectDiagram) -> list[list[int]]:
    """Rows of each link component, in link order starting from the lowest row."""
    require_valid(d)
    seen: set[int] = set()
    comps = []
    for start in range(1, d.n + 1):
        if start in seen:
            continue
        cycle = []
        z = start
        while z not in seen:
            seen.add(z)
            cycle.append(z)
            z = d.row_with_tail(d.row(z).head_col)
        comps.append(cycle)
    return comps


def components(d: RectDiagram) -> int:
    return len(component_rows(d))


def _rotate_cols(d: RectDiagram, k: int) -> RectDiagram:
    n = d.n
    rows = tuple(
        HorizArc(a.z_rank, (a.tail_col - 1 + k) % n + 1, (a.head_col - 1 + k) % n + 1, a.sweep)
        for a in d.rows
    )
    return RectDiagram(n, rows)


def _serialize_bytes(d: RectDiagram) -> bytes:
    from .io import serialize

    return serialize(d).encode("utf-8")


def canonicalize(d: RectDiagram) -> bytes:
    """Key that is constant on the orbit of cyclic theta-rotations.

    Lexicographic minimum of the file serialization over all ``n`` rotations.
    """
    require_valid(d)
    return min(_serialize_bytes(_rotate_cols(d, k)) for k in range(d.n))


def arc_support_contains(a: HorizArc, n: int, x: float, strict: bool = True) -> bool:
    """Whether theta position ``x`` (in column-rank units, mod ``n``) lies in the arc's support."""
    lo, hi = (a.tail_col, a.head_col) if a.sweep > 0 else (a.head_col, a.tail_col)
    length = (hi - lo) % n
    off = (x - lo) % n
    if strict:
        return 0 < off < length
    return 0 <= off <= length


def row_wraps(a: HorizArc, n: int) -> bool:
    """True when the arc's support passes the cut theta = 0 (between column n and 1)."""
    return arc_support_contains(a, n, 0.5)


def mirror(d: RectDiagram) -> RectDiagram:
    """Reflect z (z -> n + 1 - z); an orientation-reversing symmetry of R^3."""
    require_valid(d)
    n = d.n
    rows = sorted(
        (HorizArc(n + 1 - a.z_rank, a.tail_col, a.head_col, a.sweep) for a in d.rows),
        key=lambda a: a.z_rank,
    )
    return RectDiagram(n, tuple(rows))


def reverse(d: RectDiagram) -> RectDiagram:
    """Same link with every component's orientation reversed."""
    require_valid(d)
    rows = tuple(HorizArc(a.z_rank, a.head_col, a.tail_col, -a.sweep) for a in d.rows)
    return RectDiagram(d.n, rows)
