import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import raster_crossings
from rdg import RectDiagram, canonicalize, gen_unknot_braided, gen_unknot_rect, invariant_report, validate, writhe
from rdg.generators import random_diagram
from rdg.moves import (
    QUADRANTS,
    Move,
    MoveRejected,
    apply_move,
    classify,
    destabilize,
    flip,
    h_commute,
    inverse_move,
    parse_move,
    rotate_theta,
    stabilize,
    stabilize_with_witness,
    v_commute,
)

E1, E2 = gen_unknot_rect(), gen_unknot_braided()


def tb_rot(d):
    r = invariant_report(d)
    return r.tb, r.rot


def all_corners(d):
    return [(a.z_rank, c) for a in d.rows for c in (a.tail_col, a.head_col)]


@st.composite
def diagrams(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return random_diagram(n, np.random.default_rng(draw(st.integers(0, 2**32 - 1))))


def test_flip_e1_row2_gives_e2():
    assert flip(E1, 2) == E2


def test_flip_keeps_endpoints():
    out = flip(E1, 1)
    assert (out.row(1).tail_col, out.row(1).head_col) == (1, 2)
    assert out.row(1).sweep == -1


def test_flip_bad_row():
    with pytest.raises(MoveRejected):
        flip(E1, 3)


@settings(max_examples=300, deadline=None)
@given(diagrams(), st.integers(1, 8))
def test_flip_is_legendrian_involution(d, i):
    i = (i - 1) % d.n + 1
    f = flip(d, i)
    assert validate(f).ok
    assert flip(f, i) == d
    assert tb_rot(f) == tb_rot(d)


def test_h_commute_disjoint_rows():
    # rows 2 and 3 have supports [1,2] and [3,4]
    d = RectDiagram.from_rows([(4, 1, "-"), (1, 2, "+"), (3, 4, "+"), (2, 3, "+")])
    assert validate(d).ok
    out = h_commute(d, 2)
    assert out.row(2).tail_col == 3 and out.row(3).tail_col == 1
    assert invariant_report(out) == invariant_report(d)
    assert h_commute(out, 2) == d


def test_h_commute_interleaved_rejected():
    d = RectDiagram.from_rows([(3, 2, "-"), (1, 3, "+"), (2, 4, "+"), (4, 1, "-")])
    assert validate(d).ok
    with pytest.raises(MoveRejected):
        h_commute(d, 2)


def test_v_commute_disjoint_columns():
    # columns 2 and 3 span rows 1..2 and 3..4
    d = RectDiagram.from_rows([(1, 2, "+"), (2, 1, "-"), (4, 3, "-"), (3, 4, "+")])
    assert validate(d).ok
    out = v_commute(d, 2)
    assert invariant_report(out) == invariant_report(d)
    assert v_commute(out, 2) == d


def test_v_commute_interleaved_rejected():
    # columns 1 and 2 span rows 1..3 and 2..4
    d = RectDiagram.from_rows([(4, 1, "+"), (3, 2, "-"), (1, 4, "-"), (2, 3, "+")])
    assert validate(d).ok
    with pytest.raises(MoveRejected):
        v_commute(d, 1)


def test_commutations_on_e2_are_all_rejected():
    for m in [Move.hc(1), Move.vc(1), Move.vc(2)]:
        with pytest.raises(MoveRejected):
            apply_move(E2, m)


@settings(max_examples=300, deadline=None)
@given(diagrams(min_n=3), st.integers(1, 8), st.booleans())
def test_commutations_preserve_everything(d, k, horizontal):
    k = (k - 1) % (d.n - 1) + 1 if horizontal else (k - 1) % d.n + 1
    move = h_commute if horizontal else v_commute
    try:
        out = move(d, k)
    except MoveRejected:
        return
    assert validate(out).ok
    assert invariant_report(out) == invariant_report(d)
    assert move(out, k) == d


@settings(max_examples=200, deadline=None)
@given(diagrams(), st.integers(0, 50))
def test_rotation(d, k):
    k %= d.n
    out = rotate_theta(d, k)
    assert invariant_report(out) == invariant_report(d)
    assert canonicalize(out) == canonicalize(d)
    assert rotate_theta(out, (d.n - k) % d.n) == d
    assert rotate_theta(d, 0) == d


def test_rotation_range():
    with pytest.raises(MoveRejected):
        rotate_theta(E2, 2)


@pytest.mark.parametrize("d", [E1, E2], ids=["E1", "E2"])
def test_stabilization_quadrant_signatures(d):
    base = invariant_report(d)
    for row, col in all_corners(d):
        deltas = []
        for q in QUADRANTS:
            s = stabilize(d, row, col, q)
            assert s.n == d.n + 1
            r = invariant_report(s)
            deltas.append((r.tb - base.tb, r.rot - base.rot, r.sl_plus - base.sl_plus))
        assert sorted(x[:2] for x in deltas) == [(-1, -1), (-1, 1), (0, 0), (0, 0)]
        assert [x[2] for x in deltas if x[:2] == (-1, -1)] == [0]
        assert [x[2] for x in deltas if x[:2] == (-1, 1)] == [-2]


@settings(max_examples=150, deadline=None)
@given(diagrams(max_n=7), st.integers(0, 1000), st.sampled_from(QUADRANTS))
def test_stabilization_writhe_change_matches_oracle(d, pick, q):
    row, col = all_corners(d)[pick % (2 * d.n)]
    s = stabilize(d, row, col, q)
    assert validate(s).ok
    oracle = sum(raster_crossings(s).values()) - sum(raster_crossings(d).values())
    assert writhe(s) - writhe(d) == oracle
    assert oracle in (-1, 0, 1)


@settings(max_examples=100, deadline=None)
@given(diagrams(max_n=7), st.integers(0, 1000))
def test_exactly_one_quadrant_adds_a_kink(d, pick):
    row, col = all_corners(d)[pick % (2 * d.n)]
    changes = [writhe(stabilize(d, row, col, q)) - writhe(d) for q in QUADRANTS]
    assert sorted(abs(c) for c in changes) == [0, 0, 0, 1]


@settings(max_examples=200, deadline=None)
@given(diagrams(max_n=7), st.integers(0, 1000), st.sampled_from(QUADRANTS))
def test_stabilize_then_destabilize(d, pick, q):
    row, col = all_corners(d)[pick % (2 * d.n)]
    s, witness = stabilize_with_witness(d, row, col, q)
    back = destabilize(s, *witness)
    assert back.n == d.n
    assert back == d


@pytest.mark.parametrize("d", [E1, E2], ids=["E1", "E2"])
def test_stabilize_destabilize_on_unknots(d):
    for row, col in all_corners(d):
        for q in QUADRANTS:
            s, w = stabilize_with_witness(d, row, col, q)
            assert destabilize(s, *w) == d


def test_destabilize_e1_rejected():
    for row, col in all_corners(E1):
        with pytest.raises(MoveRejected):
            destabilize(E1, row, col)


def test_stabilize_bad_corner():
    with pytest.raises(MoveRejected):
        stabilize(E1, 1, 3, "NE")
    with pytest.raises(MoveRejected):
        stabilize(E1, 1, 1, "XX")


def test_classify_labels():
    assert classify(E1, Move.flip(2)).label == "legendrian"
    seen = {}
    for q in QUADRANTS:
        c = classify(E2, Move.stab(1, 1, q))
        seen[(c.delta_tb, c.delta_rot, c.delta_sl_plus)] = c.label
    assert seen[(-1, -1, 0)] == "transverse_plus"
    assert seen[(-1, 1, -2)] == "topological"
    assert seen[(0, 0, 0)] == "legendrian"


@settings(max_examples=150, deadline=None)
@given(diagrams(max_n=6), st.integers(0, 10_000))
def test_inverse_moves_undo_and_negate(d, pick):
    cands = [Move.flip(i) for i in range(1, d.n + 1)]
    cands += [Move.hc(i) for i in range(1, d.n)] + [Move.vc(i) for i in range(1, d.n + 1)]
    cands += [Move.rot(k) for k in range(d.n)]
    cands += [Move.stab(r, c, q) for r, c in all_corners(d) for q in QUADRANTS]
    cands += [Move.destab(r, c) for r, c in all_corners(d)]
    applicable = []
    for m in cands:
        try:
            applicable.append((m, apply_move(d, m)))
        except MoveRejected:
            pass
    m, e = applicable[pick % len(applicable)]
    fwd = classify(d, m)
    back = e
    for inv in inverse_move(d, m):
        back = apply_move(back, inv)
    assert back == d
    r0, r1 = invariant_report(d), invariant_report(e)
    assert (r0.tb - r1.tb, r0.rot - r1.rot) == (-fwd.delta_tb, -fwd.delta_rot)


@settings(max_examples=100, deadline=None)
@given(diagrams(max_n=6), st.integers(0, 1000), st.sampled_from(QUADRANTS))
def test_transverse_moves_on_braided_diagrams_keep_writhe_minus_winding(d, pick, q):
    from rdg.search import braid

    b = braid(d)
    row, col = all_corners(b)[pick % (2 * b.n)]
    s = stabilize(b, row, col, q)
    if classify(b, Move.stab(row, col, q)).label == "topological" or any(a.sweep < 0 for a in s.rows):
        return
    rb, rs = invariant_report(b), invariant_report(s)
    assert rs.omega - rs.winding == rb.omega - rb.winding


def test_move_literals():
    assert str(Move.stab(1, 2, "NE")) == "stab:1,2,NE"
    assert str(Move.destab(3, 4)) == "destab:3,4"
    for lit in ["flip:2", "hc:1", "vc:3", "rot:1", "stab:1,2,SW", "destab:2,3"]:
        assert str(parse_move(lit)) == lit
    for bad in ["flip", "flip:1,2", "stab:1,2,QQ", "jump:1", "rot:x"]:
        with pytest.raises(ValueError):
            parse_move(bad)
