"""Kernel dispatch.

The numba path is used when numba imports cleanly and ``RDG_DISABLE_NUMBA``
is unset (or ``0``).  Both paths are importable as ``numpy_backend`` and
``numba_backend`` for cross-checking and benchmarks.
"""

import os

import numpy as np

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # numba not installed
    numba_backend = None


def _numba_requested() -> bool:
    flag = os.environ.get("RDG_DISABLE_NUMBA", "").strip().lower()
    return flag in ("", "0", "false", "no")


if numba_backend is not None and _numba_requested():
    _impl = numba_backend
    BACKEND = "numba"
else:
    _impl = numpy_backend
    BACKEND = "numpy"


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def crossing_matrix(tail, head, sweep, vfrom, vto):
    """Signed crossing matrix ``M[row, col]`` (0 where no crossing)."""
    return _impl.crossing_matrix(_i64(tail), _i64(head), _i64(sweep), _i64(vfrom), _i64(vto))


def winding_per_gap(tail, head, sweep):
    """Signed count of horizontal arcs covering each gap ``g`` between columns g and g+1."""
    return _impl.winding_per_gap(_i64(tail), _i64(head), _i64(sweep))


def segment_residuals(base, seg_start, shift=0.0):
    """Per-segment |alpha_sym| / length for the pushed-forward cylindrical segments."""
    base = np.ascontiguousarray(base, dtype=np.float64)
    return _impl.segment_residuals(base, _i64(seg_start), float(shift))


__all__ = [
    "BACKEND",
    "crossing_matrix",
    "winding_per_gap",
    "segment_residuals",
    "numpy_backend",
    "numba_backend",
]
