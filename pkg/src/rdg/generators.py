"""Reference diagrams and the torus-cable slope arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .diagram import HorizArc, RectDiagram, require_valid

__all__ = [
    "CableSpec",
    "cable_slope",
    "cable_type",
    "gen_unknot_rect",
    "gen_unknot_braided",
    "gen_braid_closure",
    "gen_torus_knot",
    "parse_braid_word",
    "random_diagram",
]


@dataclass(frozen=True)
class CableSpec:
    """Train-track weights ``(r, s)`` on the convex torus around the (2,3)-torus knot."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise ValueError(f"weights must be non-negative, got ({self.r}, {self.s})")
        if self.r == 0 and self.s == 0:
            raise ValueError("weights (0, 0) do not describe a curve")


def cable_slope(spec: CableSpec) -> Fraction:
    """Ruling slope ``-(2r+s)/(11r+5s)``, reduced."""
    return Fraction(-(2 * spec.r + spec.s), 11 * spec.r + 5 * spec.s)


def cable_type(spec: CableSpec) -> tuple[int, int]:
    """The curve is a ``(2r+s, r+s)``-cable of the (2,3)-torus knot."""
    return (2 * spec.r + spec.s, spec.r + spec.s)


def gen_unknot_rect() -> RectDiagram:
    """The 2x2 rectangle: the standard Legendrian unknot (tb -1, rot 0)."""
    return RectDiagram.from_rows([(1, 2, "+"), (2, 1, "-")])


def gen_unknot_braided() -> RectDiagram:
    """The same unknot with its backward arc flipped through the axis."""
    return RectDiagram.from_rows([(1, 2, "+"), (2, 1, "+")])


def parse_braid_word(text: str) -> list[int]:
    """``"1 1 -2"`` or ``"1,1,-2"`` -> ``[1, 1, -2]``."""
    toks = text.replace(",", " ").split()
    if not toks:
        raise ValueError("empty braid word")
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ValueError(f"braid word must be signed generator indices, got {text!r}") from None


def gen_braid_closure(word: Sequence[int], strands: int) -> RectDiagram:
    """Braided rectangular diagram of the closure of ``word`` on ``strands`` strands.

    Letter ``i`` is sigma_i (a positive crossing between tracks ``i`` and
    ``i + 1``), ``-i`` its inverse.  Every track owns a band of z-levels
    ``[p, p + 1)``; new levels are dyadic midpoints so they never repeat.
    Each letter uses two columns: for sigma_i the upper strand drops into
    band ``i`` first (its vertical passes over the lower strand), then the
    lower strand climbs into band ``i + 1``.  sigma_i^-1 reverses the order.
    One jog column per track at the start closes the braid without
    crossings; the arcs leaving the last letters wrap through theta = 0.
    """
    word = [int(w) for w in word]
    if strands < 1:
        raise ValueError("need at least one strand")
    if not word:
        raise ValueError("braid word must be non-empty")
    for w in word:
        if w == 0 or abs(w) >= strands:
            raise ValueError(f"generator {w} out of range for {strands} strands")

    touched = {abs(w) for w in word} | {abs(w) + 1 for w in word}
    half = Fraction(1, 2)
    cur_level = {p: p + half for p in range(1, strands + 1)}
    cur_tail: dict[int, Fraction | None] = {p: None for p in range(1, strands + 1)}
    jog_col: dict[int, Fraction] = {}
    arcs: list[tuple[Fraction, Fraction, Fraction]] = []  # (level, tail col, head col)

    def end_arc(p, col):
        if cur_tail[p] is not None:
            arcs.append((cur_level[p], cur_tail[p], col))

    for p in range(1, strands + 1):
        jog_col[p] = Fraction(p)
        cur_tail[p] = jog_col[p]
        if p not in touched:
            extra = p + half
            end_arc(p, extra)
            cur_level[p] = p + Fraction(1, 4)
            cur_tail[p] = extra

    col = Fraction(strands + 1)
    for w in word:
        i = abs(w)
        drop_to = (i + cur_level[i]) / 2  # below the lower strand, inside band i
        climb_to = (cur_level[i + 1] + (i + 2)) / 2  # above the upper strand, inside band i+1
        drop_col, climb_col = (col, col + 1) if w > 0 else (col + 1, col)
        arcs.append((cur_level[i + 1], cur_tail[i + 1], drop_col))
        arcs.append((cur_level[i], cur_tail[i], climb_col))
        cur_level[i], cur_tail[i] = drop_to, drop_col
        cur_level[i + 1], cur_tail[i + 1] = climb_to, climb_col
        col += 2

    # closing arcs wrap through theta = 0 back to each track's jog column
    for p in range(1, strands + 1):
        arcs.append((cur_level[p], cur_tail[p], jog_col[p]))

    levels = sorted(a[0] for a in arcs)
    cols = sorted({a[1] for a in arcs} | {a[2] for a in arcs})
    if len(set(levels)) != len(levels) or len(cols) != len(arcs):
        raise RuntimeError("braid closure construction produced coincident levels")
    zr = {z: k for k, z in enumerate(levels, start=1)}
    cr = {c: k for k, c in enumerate(cols, start=1)}
    rows = sorted((HorizArc(zr[z], cr[t], cr[h], 1) for z, t, h in arcs), key=lambda a: a.z_rank)
    return require_valid(RectDiagram(len(rows), tuple(rows)))


def gen_torus_knot(p: int, q: int) -> RectDiagram:
    """Closure of ``(sigma_1 ... sigma_{p-1})^q`` on ``p`` strands."""
    if p < 2 or q < 1:
        raise ValueError(f"torus link needs p >= 2 and q >= 1, got ({p}, {q})")
    return gen_braid_closure(list(range(1, p)) * q, p)


def random_diagram(n: int, rng: np.random.Generator) -> RectDiagram:
    """Uniform tails, heads ``tails[pi]`` for a random derangement ``pi``, random sweeps."""
    if n < 2:
        raise ValueError("a rectangular diagram needs n >= 2")
    tails = rng.permutation(n) + 1
    while True:
        pi = rng.permutation(n)
        if not np.any(pi == np.arange(n)):
            break
    heads = tails[pi]
    sweeps = rng.choice((-1, 1), size=n)
    return RectDiagram.from_rows(zip(tails.tolist(), heads.tolist(), sweeps.tolist()))
