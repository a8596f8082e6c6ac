from hypothesis import given, settings, strategies as st
import numpy as np

from oracles import union_find_components
from rdg import (
    HorizArc,
    RectDiagram,
    canonicalize,
    components,
    derive_verticals,
    gen_unknot_braided,
    gen_unknot_rect,
    is_braided,
    validate,
)
from rdg.diagram import InvalidDiagramError, mirror, require_valid, reverse, row_wraps
from rdg.generators import random_diagram
from rdg.moves import rotate_theta
from rdg.search import braid


def test_unknots_validate():
    assert validate(gen_unknot_rect()).ok
    assert validate(gen_unknot_braided()).ok


def test_column_used_twice_as_tail():
    d = RectDiagram.from_rows([(1, 2, "+"), (1, 2, "-")])
    rep = validate(d)
    assert not rep.ok
    assert rep.axioms & {3, 5}
    assert 5 in rep.axioms


def test_single_row_diagram_is_rejected():
    rep = validate(RectDiagram.from_rows([(1, 1, "+")]))
    assert 1 in rep.axioms


def test_out_of_range_columns_are_reported_not_raised():
    rep = validate(RectDiagram.from_rows([(1, 7, "+"), (7, 1, "+")]))
    assert 3 in rep.axioms


def test_duplicate_levels():
    d = RectDiagram(2, (HorizArc(1, 1, 2, 1), HorizArc(1, 2, 1, 1)))
    assert 4 in validate(d).axioms


def test_bad_sweep():
    d = RectDiagram(2, (HorizArc(1, 1, 2, 0), HorizArc(2, 2, 1, 1)))
    assert 1 in validate(d).axioms


def test_require_valid_raises():
    try:
        require_valid(RectDiagram.from_rows([(1, 1, "+")]))
    except InvalidDiagramError as exc:
        assert exc.report.axioms
    else:
        raise AssertionError("expected InvalidDiagramError")


def test_verticals_of_e1():
    v = {a.col: a for a in derive_verticals(gen_unknot_rect())}
    assert v[2].dir == "up" and (v[2].from_row, v[2].to_row) == (1, 2)
    assert v[1].dir == "down" and (v[1].from_row, v[1].to_row) == (2, 1)


def test_verticals_of_e2():
    v = {a.col: a for a in derive_verticals(gen_unknot_braided())}
    assert v[2].dir == "up"
    assert v[1].dir == "down"


def test_braided_flags():
    assert is_braided(gen_unknot_braided())
    assert not is_braided(gen_unknot_rect())
    assert is_braided(braid(gen_unknot_rect()))


def test_component_counts():
    assert components(gen_unknot_rect()) == 1
    assert components(gen_unknot_braided()) == 1
    two = RectDiagram.from_rows([(1, 2, "+"), (2, 1, "-"), (3, 4, "+"), (4, 3, "-")])
    assert components(two) == 2


def test_canonical_keys():
    e1, e2 = gen_unknot_rect(), gen_unknot_braided()
    assert canonicalize(e2) == canonicalize(rotate_theta(e2, 1))
    assert canonicalize(e1) != canonicalize(e2)
    assert canonicalize(e1) == canonicalize(e1)


def test_wrapping():
    e2 = gen_unknot_braided()
    assert not row_wraps(e2.row(1), 2)
    assert row_wraps(e2.row(2), 2)
    assert not any(row_wraps(a, 2) for a in gen_unknot_rect().rows)


@st.composite
def diagrams(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_diagram(n, np.random.default_rng(seed))


@settings(max_examples=200, deadline=None)
@given(diagrams())
def test_structure_properties(d):
    assert validate(d).ok
    verts = derive_verticals(d)
    assert len(verts) == len(d.rows) == d.n
    assert sorted(a.tail_col for a in d.rows) == list(range(1, d.n + 1))
    assert sorted(a.head_col for a in d.rows) == list(range(1, d.n + 1))
    assert components(d) == union_find_components(d) >= 1


@settings(max_examples=100, deadline=None)
@given(diagrams(), st.integers(0, 100))
def test_canonical_key_is_rotation_invariant(d, k):
    assert canonicalize(rotate_theta(d, k % d.n)) == canonicalize(d)


@settings(max_examples=100, deadline=None)
@given(diagrams())
def test_mirror_and_reverse_are_involutions(d):
    assert mirror(mirror(d)) == d
    assert reverse(reverse(d)) == d
    assert validate(mirror(d)).ok and validate(reverse(d)).ok
