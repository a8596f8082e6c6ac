import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rdg import gen_unknot_rect, parse, serialize
from rdg.diagram import InvalidDiagramError
from rdg.generators import random_diagram
from rdg.io import ParseError, read_diagram, write_diagram

E1_TEXT = "rdg v1\nn 2\nrow 1 1 2 +\nrow 2 2 1 -\n"


def test_serialize_e1():
    text = serialize(gen_unknot_rect())
    assert text == E1_TEXT
    assert len(text.splitlines()) == 4


def test_parse_e1():
    assert parse(E1_TEXT) == gen_unknot_rect()


def test_duplicate_z_rank_is_axiom_4():
    with pytest.raises(InvalidDiagramError) as exc:
        parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 1 2 1 -\n")
    assert 4 in exc.value.report.axioms


def test_unknown_version():
    with pytest.raises(ParseError, match="unsupported version"):
        parse("rdg v2\nn 2\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("rdg v1\r\nn 2\r\n", 1),
        ("rdg v1\nn 2\nrow 1 1 2 + \nrow 2 2 1 -\n", 3),
        ("rdg v1\nn 2\nrow 1  1 2 +\nrow 2 2 1 -\n", 3),
        ("rdg v1\nn 2\nrow 1 1 2 *\nrow 2 2 1 -\n", 3),
        ("rdg v1\nn x\n", 2),
        ("rdg v1\nn 2\nrow 1 1 2 +\nline 2 2 1 -\n", 4),
        ("rdg v1\nn 2\nrow 2 2 1 -\nrow 1 1 2 +\n", 3),
        ("hello\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.line == line
    assert exc.value.col >= 1


def test_invalid_diagram_reports_axioms():
    with pytest.raises(InvalidDiagramError) as exc:
        parse("rdg v1\nn 2\nrow 1 1 2 +\nrow 2 1 2 -\n")
    assert {3, 5} & exc.value.report.axioms


def test_unicode_minus_is_accepted():
    assert parse(E1_TEXT.replace("1 -", "1 −")) == gen_unknot_rect()


def test_file_roundtrip(tmp_path):
    p = tmp_path / "e1.rdg"
    write_diagram(gen_unknot_rect(), p)
    assert p.read_bytes() == E1_TEXT.encode()
    assert read_diagram(p) == gen_unknot_rect()


def test_roundtrip_1000_random():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        d = random_diagram(int(rng.integers(2, 12)), rng)
        text = serialize(d)
        assert parse(text) == d
        assert serialize(parse(text)) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 15), st.integers(0, 2**32 - 1))
def test_serialization_is_canonical(n, seed):
    text = serialize(random_diagram(n, np.random.default_rng(seed)))
    lines = text.split("\n")
    assert lines[-1] == "" and all(line == line.rstrip() for line in lines)
    assert [int(line.split()[1]) for line in lines[2:-1]] == list(range(1, n + 1))
