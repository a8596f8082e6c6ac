"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 50]

Both backends are imported directly, so the RDG_DISABLE_NUMBA flag does not
matter here.  The first numba call (compilation) is excluded.
"""

import argparse
import timeit

import numpy as np

from rdg import _kernels
from rdg.generators import random_diagram
from rdg.geometry import embed
from rdg.invariants import diagram_arrays


def i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def cases(rng):
    for n in (8, 32, 128, 512):
        d = random_diagram(n, rng)
        arrays = tuple(i64(a) for a in diagram_arrays(d))
        yield f"crossing_matrix n={n}", "crossing_matrix", arrays
        yield f"winding_per_gap n={n}", "winding_per_gap", arrays[:3]
    for n in (4, 16, 64):
        c = embed(random_diagram(n, rng), r2=float(n), samples_per_arc=64)
        args = (np.ascontiguousarray(c.base), i64(c.seg_start), 100.0)
        yield f"segment_residuals n={n} ({len(c.seg_start)} segs)", "segment_residuals", args


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if _kernels.numba_backend is None:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(args.seed)
    print(f"{'case':44s} {'numpy us':>10s} {'numba us':>10s} {'speedup':>8s}")
    for label, name, fargs in cases(rng):
        fnp = getattr(_kernels.numpy_backend, name)
        fnb = getattr(_kernels.numba_backend, name)
        a, b = fnp(*fargs), fnb(*fargs)  # warm-up and agreement check
        assert np.allclose(a, b, atol=1e-12), label
        t_np = min(timeit.repeat(lambda: fnp(*fargs), number=1, repeat=args.repeat)) * 1e6
        t_nb = min(timeit.repeat(lambda: fnb(*fargs), number=1, repeat=args.repeat)) * 1e6
        print(f"{label:44s} {t_np:10.1f} {t_nb:10.1f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
