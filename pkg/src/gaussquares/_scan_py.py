"""Pure-Python scan kernels (fallback twin of the compiled _scan module).

Same functions, same argument meanings, same emission order as
_scan.pyx, so the two are interchangeable and directly benchmarkable
against each other. Everything here works on plain int tuples; object
construction and class-level deduplication stay in the callers.
"""

from __future__ import annotations

import math

MAX_KERNEL_NORM = 10**6  # keeps the compiled twin inside int64


def _check_bound(max_norm: int) -> None:
    if not isinstance(max_norm, int) or max_norm < 1:
        raise ValueError("max_norm must be a positive integer")
    if max_norm > MAX_KERNEL_NORM:
        raise ValueError(f"max_norm {max_norm} exceeds kernel limit {MAX_KERNEL_NORM}")


def _normalized_points(max_norm: int) -> list[tuple[int, int]]:
    """Sign-normalized lattice points with 0 < norm <= max_norm, (re, im) sorted."""
    top = math.isqrt(max_norm)
    pts = []
    for re in range(0, top + 1):
        for im in range(-top, top + 1):
            if re == 0 and im <= 0:
                continue
            if 0 < re * re + im * im <= max_norm:
                pts.append((re, im))
    pts.sort()
    return pts


def _gauss_sqrt_raw(x: int, y: int) -> tuple[int, int] | None:
    """Sign-normalized Gaussian square root of x + y*i, or None."""
    if x == 0 and y == 0:
        return (0, 0)
    n = x * x + y * y
    s = math.isqrt(n)
    if s * s != n:
        return None
    ha = s + x
    if ha % 2:
        return None
    a = math.isqrt(ha // 2)
    if a * a != ha // 2:
        return None
    hb = (s - x) // 2
    b = math.isqrt(hb)
    if b * b != hb:
        return None
    if a * a - b * b == x and 2 * a * b == y:
        pass
    elif a * a - b * b == x and -2 * a * b == y:
        b = -b
    else:
        return None
    if a > 0 or (a == 0 and b >= 0):
        return (a, b)
    return (-a, -b)


def zero_sum_scan(max_norm: int) -> list[tuple[int, int, int, int, int, int]]:
    """All raw triples (alpha, beta, gamma) with the squares summing to zero.

    alpha and beta run over ordered pairs of sign-normalized points with
    norms <= max_norm; gamma is the root of -(alpha^2 + beta^2) when it
    exists, is nonzero, and fits the bound. Every zero-sum class appears
    at least once; deduplication is the caller's job.
    """
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    out = []
    for i, (ax, ay) in enumerate(pts):
        a_sq_re = ax * ax - ay * ay
        a_sq_im = 2 * ax * ay
        for bx, by in pts[i:]:
            wx = -(a_sq_re + bx * bx - by * by)
            wy = -(a_sq_im + 2 * bx * by)
            g = _gauss_sqrt_raw(wx, wy)
            if g is None:
                continue
            cx, cy = g
            if (cx or cy) and cx * cx + cy * cy <= max_norm:
                out.append((ax, ay, bx, by, cx, cy))
    return out


def triplet_scan(max_norm: int) -> list[tuple[int, int, int, int, int, int]]:
    """All raw root triples (X, Z, Y) with X^2 + Y^2 = 2*Z^2, norms <= max_norm.

    X and Y run over ordered pairs of sign-normalized points; Z (possibly
    zero) is the root of the forced center square.
    """
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    out = []
    for i, (xx, xy) in enumerate(pts):
        x_sq_re = xx * xx - xy * xy
        x_sq_im = 2 * xx * xy
        for yx, yy in pts[i:]:
            wre = x_sq_re + yx * yx - yy * yy
            wim = x_sq_im + 2 * yx * yy
            if wre % 2 or wim % 2:
                continue
            g = _gauss_sqrt_raw(wre // 2, wim // 2)
            if g is None:
                continue
            zx, zy = g
            if zx * zx + zy * zy <= max_norm:
                out.append((xx, xy, zx, zy, yx, yy))
    return out


def euclid_scan(max_norm: int, stripe: int = 0, stripes: int = 1) -> list[tuple[int, int, int, int, int, int]]:
    """Raw leg triples d*(p^2 - q^2), 2*d*p*q, d*(p^2 + q^2).

    Parameters p, q run over ordered pairs of sign-normalized points and
    the scale d over sign-normalized points small enough to keep all
    three component norms within the bound. Emits (A, B, C) leg triples;
    zero legs are skipped. The outer p loop can be strided for worker
    partitioning: the union over stripe in range(stripes) is the full scan.
    """
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    d_cache: dict[int, list[tuple[int, int]]] = {}
    out = []
    for i in range(stripe, len(pts), stripes):
        px, py = pts[i]
        p_sq_re = px * px - py * py
        p_sq_im = 2 * px * py
        for qx, qy in pts[i:]:
            q_sq_re = qx * qx - qy * qy
            q_sq_im = 2 * qx * qy
            a_re, a_im = p_sq_re - q_sq_re, p_sq_im - q_sq_im
            b_re, b_im = 2 * (px * qx - py * qy), 2 * (px * qy + py * qx)
            c_re, c_im = p_sq_re + q_sq_re, p_sq_im + q_sq_im
            if (a_re == 0 and a_im == 0) or (b_re == 0 and b_im == 0) or (c_re == 0 and c_im == 0):
                continue
            biggest = max(
                a_re * a_re + a_im * a_im,
                b_re * b_re + b_im * b_im,
                c_re * c_re + c_im * c_im,
            )
            bound_d = max_norm // biggest
            if bound_d < 1:
                continue
            d_pts = d_cache.get(bound_d)
            if d_pts is None:
                d_pts = d_cache[bound_d] = _normalized_points(bound_d)
            for dx, dy in d_pts:
                out.append(
                    (
                        dx * a_re - dy * a_im,
                        dx * a_im + dy * a_re,
                        dx * b_re - dy * b_im,
                        dx * b_im + dy * b_re,
                        dx * c_re - dy * c_im,
                        dx * c_im + dy * c_re,
                    )
                )
    return out
