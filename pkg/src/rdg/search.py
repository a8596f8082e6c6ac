"""Braiding and bounded move-graph search.

``braid`` is the Alexander-type algorithm: flipping every backward
horizontal arc through the z-axis makes the diagram braided without changing
its Legendrian type.  ``equivalent`` runs a bidirectional breadth-first
search over canonical keys, using only moves whose computed class is admitted
by the chosen move set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import RectDiagram, canonicalize, components, is_braided, require_valid
from .invariants import invariant_report
from .moves import (
    QUADRANTS,
    Move,
    MoveClass,
    MoveRejected,
    apply_move,
    classify_delta,
    flip,
    inverse_move,
    rotate_theta,
)

__all__ = [
    "MOVE_SETS",
    "SearchConfig",
    "EquivalenceCertificate",
    "CertificateError",
    "braid",
    "neighbors",
    "equivalent",
    "replay",
]

MOVE_SETS = ("legendrian", "transverse_plus", "topological")

_ADMITTED = {
    "legendrian": frozenset({"legendrian"}),
    "transverse_plus": frozenset({"legendrian", "transverse_plus"}),
    "topological": frozenset({"legendrian", "transverse_plus", "topological"}),
}


def normalize_move_set(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    if key in ("transverse", "transverse+", "transverse_plus"):
        return "transverse_plus"
    if key not in _ADMITTED:
        raise ValueError(f"unknown move set {name!r}; use legendrian, transverse or topological")
    return key


@dataclass(frozen=True)
class SearchConfig:
    """Bounds for ``equivalent``.  ``max_grid=None`` means two more than the larger input."""

    max_grid: int | None = None
    max_depth: int = 10
    move_set: str = "legendrian"
    node_budget: int = 1_000_000
    braided_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "move_set", normalize_move_set(self.move_set))
        if self.max_grid is not None and self.max_grid < 1:
            raise ValueError("max_grid must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be positive")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")


@dataclass(frozen=True)
class EquivalenceCertificate:
    verdict: str  # "equivalent" or "not_found_within_bounds"
    path: tuple[tuple[Move, RectDiagram], ...] = ()
    obstruction: str | None = None
    reason: str = ""
    explored: int = 0
    config: SearchConfig = field(default_factory=SearchConfig)

    @property
    def found(self) -> bool:
        return self.verdict == "equivalent"

    @property
    def moves(self) -> list[Move]:
        return [m for m, _ in self.path]

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "moves": [str(m) for m in self.moves],
            "obstruction": self.obstruction,
            "reason": self.reason,
            "explored": self.explored,
        }


class CertificateError(ValueError):
    pass


def braid(d: RectDiagram) -> RectDiagram:
    """Flip every backward horizontal arc; the result is braided with no down cusps."""
    require_valid(d)
    for a in d.rows:
        if a.sweep < 0:
            d = flip(d, a.z_rank)
    return d


def _candidate_moves(d: RectDiagram, max_grid: int | None) -> Iterator[Move]:
    n = d.n
    for z in range(1, n + 1):
        yield Move.flip(z)
    for z in range(1, n):
        yield Move.hc(z)
    for c in range(1, n + 1):
        yield Move.vc(c)
    for k in range(1, n):
        yield Move.rot(k)
    if max_grid is None or n + 1 <= max_grid:
        for a in d.rows:
            for c in (a.tail_col, a.head_col):
                for q in QUADRANTS:
                    yield Move.stab(a.z_rank, c, q)
    if n >= 3:
        for a in d.rows:
            if a.extent(n) == 1:
                for c in (a.tail_col, a.head_col):
                    yield Move.destab(a.z_rank, c)


def neighbors(
    d: RectDiagram,
    move_set: str = "legendrian",
    max_grid: int | None = None,
    braided_only: bool = False,
) -> list[tuple[Move, RectDiagram]]:
    """Applicable moves admitted by ``move_set``, in a fixed order."""
    require_valid(d)
    admitted = _ADMITTED[normalize_move_set(move_set)]
    out = []
    for m in _candidate_moves(d, max_grid):
        try:
            e = apply_move(d, m)
        except MoveRejected:
            continue
        if braided_only and not is_braided(e):
            continue
        if classify_delta(d, e).label in admitted:
            out.append((m, e))
    return out


def _obstruction(d1: RectDiagram, d2: RectDiagram, move_set: str) -> str | None:
    if components(d1) != components(d2):
        return "components"
    a, b = invariant_report(d1), invariant_report(d2)
    if move_set == "legendrian":
        if a.tb != b.tb:
            return "tb"
        if a.rot != b.rot:
            return "rot"
    elif move_set == "transverse_plus" and a.sl_plus != b.sl_plus:
        return "sl_plus"
    return None


def _rotation_between(a: RectDiagram, b: RectDiagram) -> int:
    for k in range(a.n):
        if rotate_theta(a, k) == b:
            return k
    raise RuntimeError("diagrams with equal keys are not rotations of each other")


def _chain(start: RectDiagram, moves) -> list[tuple[Move, RectDiagram]]:
    out = []
    d = start
    for m in moves:
        d = apply_move(d, m)
        out.append((m, d))
    return out


def equivalent(d1: RectDiagram, d2: RectDiagram, cfg: SearchConfig | None = None) -> EquivalenceCertificate:
    """Search for a move sequence from ``d1`` to ``d2`` (exactly, not just up to rotation)."""
    cfg = cfg or SearchConfig()
    require_valid(d1)
    require_valid(d2)
    max_grid = cfg.max_grid if cfg.max_grid is not None else max(d1.n, d2.n) + 2

    def result(verdict, moves=(), obstruction=None, reason="", explored=0):
        path = tuple(_chain(d1, moves))
        return EquivalenceCertificate(verdict, path, obstruction, reason, explored, cfg)

    obs = _obstruction(d1, d2, cfg.move_set)
    if obs is not None:
        return result("not_found_within_bounds", obstruction=obs, reason=f"{obs} differs")
    if max(d1.n, d2.n) > max_grid:
        return result("not_found_within_bounds", reason="input exceeds max_grid")
    if cfg.braided_only and not (is_braided(d1) and is_braided(d2)):
        return result("not_found_within_bounds", reason="braided_only needs braided inputs")

    k1, k2 = canonicalize(d1), canonicalize(d2)
    if k1 == k2:
        k = _rotation_between(d1, d2)
        return result("equivalent", (Move.rot(k),) if k else (), reason="same canonical key")

    # key -> (representative, parent key, move from parent)
    fwd: dict[bytes, tuple[RectDiagram, bytes | None, Move | None]] = {k1: (d1, None, None)}
    bwd: dict[bytes, tuple[RectDiagram, bytes | None, Move | None]] = {k2: (d2, None, None)}
    fwd_frontier, bwd_frontier = deque([k1]), deque([k2])
    depth = {"f": 0, "b": 0}
    explored = 2

    def forward_moves(key):
        moves = []
        while True:
            rep, parent, m = fwd[key]
            if parent is None:
                return list(reversed(moves))
            moves.append(m)
            key = parent

    def backward_moves(key):
        # each stored move maps the parent forward to this node; undo it
        moves = []
        while True:
            rep, parent, m = bwd[key]
            if parent is None:
                return moves
            moves.extend(inverse_move(bwd[parent][0], m))
            key = parent

    def splice(key):
        fwd_rep = fwd[key][0]
        bwd_rep = bwd[key][0]
        k = _rotation_between(fwd_rep, bwd_rep)
        moves = forward_moves(key) + ([Move.rot(k)] if k else []) + backward_moves(key)
        return result("equivalent", moves, explored=explored)

    while fwd_frontier and bwd_frontier:
        if depth["f"] + depth["b"] >= cfg.max_depth:
            return result("not_found_within_bounds", reason=f"depth {cfg.max_depth} exhausted", explored=explored)
        forward = len(fwd_frontier) <= len(bwd_frontier)
        side, other, frontier = (fwd, bwd, fwd_frontier) if forward else (bwd, fwd, bwd_frontier)
        nxt: deque[bytes] = deque()
        for key in frontier:
            rep = side[key][0]
            for m, e in neighbors(rep, cfg.move_set, max_grid, cfg.braided_only):
                ek = canonicalize(e)
                if ek in side:
                    continue
                side[ek] = (e, key, m)
                explored += 1
                if ek in other:
                    return splice(ek)
                if explored >= cfg.node_budget:
                    return result("not_found_within_bounds", reason="node budget exhausted", explored=explored)
                nxt.append(ek)
        depth["f" if forward else "b"] += 1
        if forward:
            fwd_frontier = nxt
        else:
            bwd_frontier = nxt
    return result("not_found_within_bounds", reason="search space exhausted", explored=explored)


def replay(d1: RectDiagram, cert: EquivalenceCertificate, move_set: str | None = None) -> RectDiagram:
    """Re-apply and re-classify every step; raises ``CertificateError`` on any mismatch."""
    admitted = _ADMITTED[normalize_move_set(move_set or cert.config.move_set)]
    d = d1
    for i, (m, snap) in enumerate(cert.path, start=1):
        try:
            e = apply_move(d, m)
        except MoveRejected as exc:
            raise CertificateError(f"step {i} ({m}) does not apply: {exc}") from None
        cls: MoveClass = classify_delta(d, e)
        if cls.label not in admitted:
            raise CertificateError(f"step {i} ({m}) is {cls.label}, not admitted")
        if e != snap:
            raise CertificateError(f"step {i} ({m}) does not reproduce its snapshot")
        d = e
    return d
