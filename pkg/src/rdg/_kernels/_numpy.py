"""Vectorised numpy versions of the hot loops.

All index arrays are 0-based.  Rows are z-ranks, columns are theta-ranks.
"""

import numpy as np


def crossing_matrix(tail, head, sweep, vfrom, vto):
    n = tail.shape[0]
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    lo = np.where(sweep > 0, tail, head)[:, None]
    hi = np.where(sweep > 0, head, tail)[:, None]
    length = (hi - lo) % n
    off = (cols - lo) % n
    in_support = (off > 0) & (off < length)
    vlo = np.minimum(vfrom, vto)[None, :]
    vhi = np.maximum(vfrom, vto)[None, :]
    in_vertical = (rows > vlo) & (rows < vhi)
    up = np.where(vto > vfrom, 1, -1)[None, :]
    sign = -sweep[:, None] * up
    return np.where(in_support & in_vertical, sign, 0).astype(np.int64)


def winding_per_gap(tail, head, sweep):
    # doubled coordinates: column c sits at 2c, gap g (between c=g and g+1) at 2g+1
    n = tail.shape[0]
    n2 = 2 * n
    lo = 2 * np.where(sweep > 0, tail, head)[:, None]
    hi = 2 * np.where(sweep > 0, head, tail)[:, None]
    gaps = (2 * np.arange(n) + 1)[None, :]
    length = (hi - lo) % n2
    off = (gaps - lo) % n2
    cover = (off > 0) & (off < length)
    return (cover * sweep[:, None]).sum(axis=0).astype(np.int64)


def segment_residuals(base, seg_start, shift):
    p = base[seg_start]
    q = base[seg_start + 1]
    r = 0.5 * (p[:, 0] + q[:, 0])
    th = 0.5 * (p[:, 1] + q[:, 1])
    z = 0.5 * (p[:, 2] + q[:, 2])
    dr = q[:, 0] - p[:, 0]
    dth = q[:, 1] - p[:, 1]
    dz = q[:, 2] - p[:, 2]
    c = np.cos(th)
    s = np.sin(th)
    px = r * c + shift
    py = r * s + shift
    vx = dr * c - r * dth * s
    vy = dr * s + r * dth * c
    vz = dz + shift * (vx - vy)
    alpha = vz + px * vy - py * vx

    def cart(pts):
        x = pts[:, 0] * np.cos(pts[:, 1])
        y = pts[:, 0] * np.sin(pts[:, 1])
        return x + shift, y + shift, pts[:, 2] + shift * (x - y)

    xp, yp, zp = cart(p)
    xq, yq, zq = cart(q)
    length = np.sqrt((xq - xp) ** 2 + (yq - yp) ** 2 + (zq - zp) ** 2)
    return np.abs(alpha) / length
