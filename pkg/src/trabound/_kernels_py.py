"""Pure-Python implementations of the hot loops.

Every function here has a twin with the same signature in ``_kernels.pyx``.
The package imports the compiled module when it is available and falls back
to this one otherwise (see ``trabound._backend``).
"""

from __future__ import annotations

import math

_EPS = 2.220446049250313e-16
_SAFEMIN = 2.2250738585072014e-308
# 2**-930 and its log: exact power-of-two rescaling keeps mantissas exact.
_RESCALE = 2.0**-930
_LOG_RESCALE = 930.0 * math.log(2.0)
_BIG = 1e280
_FILL_BIG = 1e250


def _pivmin(e2):
    m = 1.0
    for v in e2:
        if v > m:
            m = v
    return _SAFEMIN * m


def sturm_count(d, e2, x):
    """Number of eigenvalues strictly below ``x``.

    ``e2`` holds the squared off-diagonal entries.
    """
    d = list(d)
    e2 = list(e2)
    pivmin = _pivmin(e2)
    count = 0
    q = d[0] - x
    if abs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, len(d)):
        q = d[i] - x - e2[i - 1] / q
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def _gershgorin(d, e):
    m = len(d)
    lo = math.inf
    hi = -math.inf
    for i in range(m):
        r = 0.0
        if i > 0:
            r += abs(e[i - 1])
        if i < m - 1:
            r += abs(e[i])
        lo = min(lo, d[i] - r)
        hi = max(hi, d[i] + r)
    return lo, hi


def _bisect_index(d, e2, k, lo, hi, pivmin, abstol):
    # invariant: count(lo) <= k < count(hi)
    for _ in range(400):
        if hi - lo <= max(abstol, 2.0 * _EPS * max(abs(lo), abs(hi))):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        # inline Sturm count for speed
        count = 0
        q = d[0] - mid
        if abs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
        for i in range(1, len(d)):
            q = d[i] - mid - e2[i - 1] / q
            if abs(q) < pivmin:
                q = -pivmin
            if q < 0.0:
                count += 1
        if count > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def tridiag_eigvalsh(d, e):
    """All eigenvalues of a symmetric tridiagonal matrix, ascending."""
    d = [float(v) for v in d]
    e = [float(v) for v in e]
    m = len(d)
    if m == 1:
        return [d[0]]
    e2 = [v * v for v in e]
    lo, hi = _gershgorin(d, e)
    width = max(abs(lo), abs(hi), _SAFEMIN)
    lo -= 4.0 * _EPS * width + 1e-300
    hi += 4.0 * _EPS * width + 1e-300
    pivmin = _pivmin(e2)
    abstol = 4.0 * _SAFEMIN
    return [_bisect_index(d, e2, k, lo, hi, pivmin, abstol) for k in range(m)]


def tridiag_eigval_index(d, e, k):
    """The ``k``-th smallest eigenvalue (0-based) by Sturm bisection."""
    d = [float(v) for v in d]
    e = [float(v) for v in e]
    if len(d) == 1:
        return d[0]
    e2 = [v * v for v in e]
    lo, hi = _gershgorin(d, e)
    width = max(abs(lo), abs(hi), _SAFEMIN)
    lo -= 4.0 * _EPS * width + 1e-300
    hi += 4.0 * _EPS * width + 1e-300
    return _bisect_index(d, e2, k, lo, hi, _pivmin(e2), 4.0 * _SAFEMIN)


def recursion_scaled(r, s, t, z):
    """Forward three-term recursion with overflow rescaling.

    Returns ``(mant, logscale)`` with F_n = mant[n] * exp(logscale[n]).
    """
    n_max = len(r) - 1
    mant = [0.0] * (n_max + 1)
    logs = [0.0] * (n_max + 1)
    f_prev = 0.0
    f = 1.0
    mant[0] = 1.0
    ls = 0.0
    for n in range(n_max):
        back = t[n - 1] * f_prev if n > 0 else 0.0
        f_next = ((z - r[n]) * f - back) / s[n]
        f_prev = f
        f = f_next
        if abs(f) > _BIG:
            f *= _RESCALE
            f_prev *= _RESCALE
            ls += _LOG_RESCALE
        mant[n + 1] = f
        logs[n + 1] = ls
    return mant, logs


def numerov_count(g, start, y_prev, y_cur):
    """Sign changes of the Numerov sequence y_start .. y_end.

    Iterates y[n+1] = g[n]*y[n] - y[n-1] for n = start .. len(g)-2, where
    ``y_prev`` is y[start-1] and ``y_cur`` is y[start].
    """
    g = g.tolist() if hasattr(g, "tolist") else list(g)
    end = len(g) - 1
    count = 0
    last_sign = 0.0
    if y_cur != 0.0:
        last_sign = 1.0 if y_cur > 0.0 else -1.0
    a = y_prev
    b = y_cur
    for n in range(start, end):
        c = g[n] * b - a
        a = b
        b = c
        if c != 0.0:
            sgn = 1.0 if c > 0.0 else -1.0
            if last_sign != 0.0 and sgn != last_sign:
                count += 1
            last_sign = sgn
        if abs(b) > _BIG:
            a *= _RESCALE
            b *= _RESCALE
    return count


def numerov_fill(g, start, y_prev, y_cur):
    """Numerov sequence y[start .. len(g)-1] as a list, rescaled on overflow."""
    g = g.tolist() if hasattr(g, "tolist") else list(g)
    end = len(g) - 1
    out = [0.0] * (end - start + 1)
    out[0] = y_cur
    a = y_prev
    b = y_cur
    for n in range(start, end):
        c = g[n] * b - a
        a = b
        b = c
        out[n - start + 1] = c
        if abs(b) > _FILL_BIG:
            for j in range(n - start + 2):
                out[j] /= _FILL_BIG
            a /= _FILL_BIG
            b /= _FILL_BIG
    return out
