"""Loop kernels compiled with numba; same contracts as the numpy versions."""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def crossing_matrix(tail, head, sweep, vfrom, vto):
    n = tail.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        if sweep[i] > 0:
            lo, hi = tail[i], head[i]
        else:
            lo, hi = head[i], tail[i]
        length = (hi - lo) % n
        for c in range(n):
            off = (c - lo) % n
            if off <= 0 or off >= length:
                continue
            a, b = vfrom[c], vto[c]
            if a < b:
                if a < i < b:
                    out[i, c] = -sweep[i]
            elif b < i < a:
                out[i, c] = sweep[i]
    return out


@njit(cache=True)
def winding_per_gap(tail, head, sweep):
    n = tail.shape[0]
    n2 = 2 * n
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        if sweep[i] > 0:
            lo, hi = 2 * tail[i], 2 * head[i]
        else:
            lo, hi = 2 * head[i], 2 * tail[i]
        length = (hi - lo) % n2
        for g in range(n):
            off = (2 * g + 1 - lo) % n2
            if 0 < off < length:
                out[g] += sweep[i]
    return out


@njit(cache=True)
def segment_residuals(base, seg_start, shift):
    m = seg_start.shape[0]
    out = np.empty(m, dtype=np.float64)
    for k in range(m):
        j = seg_start[k]
        r0, t0, z0 = base[j, 0], base[j, 1], base[j, 2]
        r1, t1, z1 = base[j + 1, 0], base[j + 1, 1], base[j + 1, 2]
        r = 0.5 * (r0 + r1)
        th = 0.5 * (t0 + t1)
        c, s = math.cos(th), math.sin(th)
        dr, dth, dz = r1 - r0, t1 - t0, z1 - z0
        vx = dr * c - r * dth * s
        vy = dr * s + r * dth * c
        vz = dz + shift * (vx - vy)
        alpha = vz + (r * c + shift) * vy - (r * s + shift) * vx

        x0, y0 = r0 * math.cos(t0), r0 * math.sin(t0)
        x1, y1 = r1 * math.cos(t1), r1 * math.sin(t1)
        ex = x1 - x0
        ey = y1 - y0
        ez = (z1 + shift * (x1 - y1)) - (z0 + shift * (x0 - y0))
        out[k] = abs(alpha) / math.sqrt(ex * ex + ey * ey + ez * ez)
    return out
