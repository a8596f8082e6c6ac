"""Seeded diagram corpora shared by the test modules."""

import numpy as np

from rdg import gen_braid_closure, gen_torus_knot, gen_unknot_braided, gen_unknot_rect
from rdg.generators import random_diagram
from rdg.moves import QUADRANTS, stabilize

# lines printed in the terminal summary, one per acceptance criterion
ACCEPTANCE_LINES: list[str] = []

BRAID_WORDS = [
    ([1, 1, 1], 2),
    ([1], 2),
    ([-1], 2),
    ([1, -2, 1, -2], 3),
    ([1], 3),
    ([2, 2, -1], 3),
    ([1, 2, 3, -2], 4),
]


def random_corpus(count=1000, max_n=8, seed=20240601):
    rng = np.random.default_rng(seed)
    return [random_diagram(int(rng.integers(2, max_n + 1)), rng) for _ in range(count)]


def reference_diagrams():
    e1, e2 = gen_unknot_rect(), gen_unknot_braided()
    out = [e1, e2]
    for d in (e1, e2):
        for a in d.rows:
            for c in (a.tail_col, a.head_col):
                out += [stabilize(d, a.z_rank, c, q) for q in QUADRANTS]
    out += [gen_braid_closure(w, k) for w, k in BRAID_WORDS]
    out += [gen_torus_knot(2, 3), gen_torus_knot(2, 1), gen_torus_knot(3, 2), gen_torus_knot(2, 4)]
    return out
