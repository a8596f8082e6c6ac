import re

from rdg import gen_torus_knot, gen_unknot_braided, gen_unknot_rect
from rdg.invariants import crossings
from rdg.render import RenderOptions, render_ascii, render_svg


def count(svg, cls):
    return len(re.findall(rf'class="{cls}"', svg))


def test_e1_svg_elements():
    svg = render_svg(gen_unknot_rect())
    assert count(svg, "h") == 2 and count(svg, "v") == 2
    assert 'data-gaps="0"' in svg and 'data-gaps="1"' not in svg
    assert count(svg, "wrap") == 0


def test_e2_has_wrap_marker():
    assert count(render_svg(gen_unknot_braided()), "wrap") == 1


def test_gaps_match_crossings():
    d = gen_torus_knot(2, 3)
    svg = render_svg(d)
    gaps = sum(int(g) for g in re.findall(r'data-gaps="(\d+)"', svg))
    assert gaps == len(crossings(d)) == 3


def test_deterministic():
    d = gen_torus_knot(3, 2)
    assert render_svg(d) == render_svg(d)
    assert render_svg(d, RenderOptions(cell=20, labels=False)) == render_svg(d, RenderOptions(cell=20, labels=False))
    assert render_ascii(d) == render_ascii(d)


def test_ascii():
    art = render_ascii(gen_unknot_braided())
    assert "~" in art and ">" in art
    assert art.count("+") == 4
