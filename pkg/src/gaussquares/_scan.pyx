# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Twin of _scan_py: same functions, same semantics, same emission order,
with the inner loops running on C int64. The bound guard in _check_bound
keeps every intermediate inside int64 range.
"""

from libc.math cimport sqrt as csqrt

MAX_KERNEL_NORM = 10 ** 6


cdef inline long long _isqrt_ll(long long n) noexcept nogil:
    cdef long long r
    if n <= 0:
        return 0
    r = <long long> csqrt(<double> n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline bint _gauss_sqrt_c(long long x, long long y,
                               long long* ga, long long* gb) noexcept nogil:
    """Sign-normalized Gaussian square root of x + y*i; False when absent."""
    cdef long long n, s, ha, hb, a, b
    if x == 0 and y == 0:
        ga[0] = 0
        gb[0] = 0
        return True
    n = x * x + y * y
    s = _isqrt_ll(n)
    if s * s != n:
        return False
    ha = s + x
    if ha % 2 != 0:
        return False
    ha = ha / 2
    a = _isqrt_ll(ha)
    if a * a != ha:
        return False
    hb = (s - x) / 2
    b = _isqrt_ll(hb)
    if b * b != hb:
        return False
    if a * a - b * b == x and 2 * a * b == y:
        pass
    elif a * a - b * b == x and -2 * a * b == y:
        b = -b
    else:
        return False
    if a > 0 or (a == 0 and b >= 0):
        ga[0] = a
        gb[0] = b
    else:
        ga[0] = -a
        gb[0] = -b
    return True


def _check_bound(max_norm):
    if not isinstance(max_norm, int) or max_norm < 1:
        raise ValueError("max_norm must be a positive integer")
    if max_norm > MAX_KERNEL_NORM:
        raise ValueError(f"max_norm {max_norm} exceeds kernel limit {MAX_KERNEL_NORM}")


def _normalized_points(max_norm):
    """Sign-normalized lattice points with 0 < norm <= max_norm, (re, im) sorted."""
    cdef long long top, re, im, bound
    bound = max_norm
    top = _isqrt_ll(bound)
    pts = []
    for re in range(0, top + 1):
        for im in range(-top, top + 1):
            if re == 0 and im <= 0:
                continue
            if 0 < re * re + im * im <= bound:
                pts.append((re, im))
    pts.sort()
    return pts


def zero_sum_scan(max_norm):
    """See _scan_py.zero_sum_scan; identical semantics on C integers."""
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    cdef long long bound = max_norm
    cdef long long ax, ay, bx, by, wx, wy, cx, cy, asr, asi
    cdef Py_ssize_t i, j, n = len(pts)
    out = []
    for i in range(n):
        ax = pts[i][0]
        ay = pts[i][1]
        asr = ax * ax - ay * ay
        asi = 2 * ax * ay
        for j in range(i, n):
            bx = pts[j][0]
            by = pts[j][1]
            wx = -(asr + bx * bx - by * by)
            wy = -(asi + 2 * bx * by)
            if not _gauss_sqrt_c(wx, wy, &cx, &cy):
                continue
            if (cx != 0 or cy != 0) and cx * cx + cy * cy <= bound:
                out.append((ax, ay, bx, by, cx, cy))
    return out


def triplet_scan(max_norm):
    """See _scan_py.triplet_scan; identical semantics on C integers."""
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    cdef long long bound = max_norm
    cdef long long xx, xy, yx, yy, wre, wim, zx, zy, xsr, xsi
    cdef Py_ssize_t i, j, n = len(pts)
    out = []
    for i in range(n):
        xx = pts[i][0]
        xy = pts[i][1]
        xsr = xx * xx - xy * xy
        xsi = 2 * xx * xy
        for j in range(i, n):
            yx = pts[j][0]
            yy = pts[j][1]
            wre = xsr + yx * yx - yy * yy
            wim = xsi + 2 * yx * yy
            if wre % 2 != 0 or wim % 2 != 0:
                continue
            if not _gauss_sqrt_c(wre / 2, wim / 2, &zx, &zy):
                continue
            if zx * zx + zy * zy <= bound:
                out.append((xx, xy, zx, zy, yx, yy))
    return out


def euclid_scan(max_norm, stripe=0, stripes=1):
    """See _scan_py.euclid_scan; identical semantics on C integers."""
    _check_bound(max_norm)
    pts = _normalized_points(max_norm)
    d_cache = {}
    cdef long long bound = max_norm
    cdef long long px, py, qx, qy, dx, dy
    cdef long long psr, psi, qsr, qsi, ar, ai, br, bi, cr, ci
    cdef long long na, nb, nc, biggest, bound_d
    cdef Py_ssize_t i, j, k, n = len(pts)
    cdef Py_ssize_t c_stripe = stripe, c_stripes = stripes
    out = []
    for i in range(c_stripe, n, c_stripes):
        px = pts[i][0]
        py = pts[i][1]
        psr = px * px - py * py
        psi = 2 * px * py
        for j in range(i, n):
            qx = pts[j][0]
            qy = pts[j][1]
            qsr = qx * qx - qy * qy
            qsi = 2 * qx * qy
            ar = psr - qsr
            ai = psi - qsi
            br = 2 * (px * qx - py * qy)
            bi = 2 * (px * qy + py * qx)
            cr = psr + qsr
            ci = psi + qsi
            if (ar == 0 and ai == 0) or (br == 0 and bi == 0) or (cr == 0 and ci == 0):
                continue
            na = ar * ar + ai * ai
            nb = br * br + bi * bi
            nc = cr * cr + ci * ci
            biggest = na
            if nb > biggest:
                biggest = nb
            if nc > biggest:
                biggest = nc
            bound_d = bound / biggest
            if bound_d < 1:
                continue
            d_pts = d_cache.get(bound_d)
            if d_pts is None:
                d_pts = d_cache[bound_d] = _normalized_points(bound_d)
            for k in range(len(d_pts)):
                dx = d_pts[k][0]
                dy = d_pts[k][1]
                out.append(
                    (
                        dx * ar - dy * ai,
                        dx * ai + dy * ar,
                        dx * br - dy * bi,
                        dx * bi + dy * br,
                        dx * cr - dy * ci,
                        dx * ci + dy * cr,
                    )
                )
    return out
