# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

Signatures and return types match the pure-Python module exactly.
"""

from array import array

from libc.math cimport fabs, log

cdef double _EPS = 2.220446049250313e-16
cdef double _SAFEMIN = 2.2250738585072014e-308
cdef double _RESCALE = 2.0 ** -930
cdef double _LOG_RESCALE = 930.0 * log(2.0)
cdef double _BIG = 1e280
cdef double _FILL_BIG = 1e250


cdef double[::1] _coerce(object seq):
    cdef double[::1] out
    if isinstance(seq, (list, tuple)):
        return array("d", seq)
    try:
        out = seq
    except (TypeError, ValueError):
        out = array("d", [float(v) for v in seq])
    return out


cdef object _zeros(Py_ssize_t n):
    return array("d", bytes(8 * n))


cdef double _pivmin(double[::1] e2) nogil:
    cdef double m = 1.0
    cdef Py_ssize_t i
    for i in range(e2.shape[0]):
        if e2[i] > m:
            m = e2[i]
    return _SAFEMIN * m


cdef Py_ssize_t _count(double[::1] d, double[::1] e2, double x, double pivmin) nogil:
    cdef Py_ssize_t i, count = 0
    cdef double q = d[0] - x
    if fabs(q) < pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for i in range(1, d.shape[0]):
        q = d[i] - x - e2[i - 1] / q
        if fabs(q) < pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


def sturm_count(d, e2, double x):
    cdef double[::1] dv = _coerce(d)
    cdef double[::1] ev = _coerce(e2)
    return _count(dv, ev, x, _pivmin(ev))


cdef void _gershgorin(double[::1] d, double[::1] e, double* lo, double* hi) nogil:
    cdef Py_ssize_t i, m = d.shape[0]
    cdef double r
    lo[0] = 1e308
    hi[0] = -1e308
    for i in range(m):
        r = 0.0
        if i > 0:
            r += fabs(e[i - 1])
        if i < m - 1:
            r += fabs(e[i])
        if d[i] - r < lo[0]:
            lo[0] = d[i] - r
        if d[i] + r > hi[0]:
            hi[0] = d[i] + r


cdef double _bisect_index(double[::1] d, double[::1] e2, Py_ssize_t k,
                          double lo, double hi, double pivmin, double abstol) nogil:
    cdef int it
    cdef double mid, tol
    for it in range(400):
        tol = 2.0 * _EPS * (fabs(lo) if fabs(lo) > fabs(hi) else fabs(hi))
        if abstol > tol:
            tol = abstol
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _count(d, e2, mid, pivmin) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


cdef tuple _setup(double[::1] d, double[::1] e):
    cdef double lo, hi, width
    _gershgorin(d, e, &lo, &hi)
    width = fabs(lo) if fabs(lo) > fabs(hi) else fabs(hi)
    if width < _SAFEMIN:
        width = _SAFEMIN
    lo -= 4.0 * _EPS * width + 1e-300
    hi += 4.0 * _EPS * width + 1e-300
    return lo, hi, 4.0 * _SAFEMIN


def tridiag_eigvalsh(d, e):
    cdef double[::1] dv = _coerce(d)
    cdef double[::1] ev = _coerce(e)
    cdef Py_ssize_t m = dv.shape[0], i, k
    if m == 1:
        return [dv[0]]
    cdef double[::1] e2 = _zeros(m - 1)
    for i in range(m - 1):
        e2[i] = ev[i] * ev[i]
    cdef double lo, hi, abstol
    lo, hi, abstol = _setup(dv, ev)
    cdef double pivmin = _pivmin(e2)
    res = _zeros(m)
    cdef double[::1] out = res
    with nogil:
        for k in range(m):
            out[k] = _bisect_index(dv, e2, k, lo, hi, pivmin, abstol)
    return res.tolist()


def tridiag_eigval_index(d, e, Py_ssize_t k):
    cdef double[::1] dv = _coerce(d)
    cdef double[::1] ev = _coerce(e)
    cdef Py_ssize_t m = dv.shape[0], i
    if m == 1:
        return dv[0]
    cdef double[::1] e2 = _zeros(m - 1)
    for i in range(m - 1):
        e2[i] = ev[i] * ev[i]
    cdef double lo, hi, abstol
    lo, hi, abstol = _setup(dv, ev)
    return _bisect_index(dv, e2, k, lo, hi, _pivmin(e2), abstol)


def recursion_scaled(r, s, t, double z):
    cdef double[::1] rv = _coerce(r)
    cdef double[::1] sv = _coerce(s)
    cdef double[::1] tv = _coerce(t)
    cdef Py_ssize_t n_max = rv.shape[0] - 1, n
    mant_arr = _zeros(n_max + 1)
    logs_arr = _zeros(n_max + 1)
    cdef double[::1] mant = mant_arr
    cdef double[::1] logs = logs_arr
    cdef double f_prev = 0.0, f = 1.0, f_next, back, ls = 0.0
    mant[0] = 1.0
    for n in range(n_max):
        back = tv[n - 1] * f_prev if n > 0 else 0.0
        f_next = ((z - rv[n]) * f - back) / sv[n]
        f_prev = f
        f = f_next
        if fabs(f) > _BIG:
            f *= _RESCALE
            f_prev *= _RESCALE
            ls += _LOG_RESCALE
        mant[n + 1] = f
        logs[n + 1] = ls
    return mant_arr.tolist(), logs_arr.tolist()


def numerov_count(g, Py_ssize_t start, double y_prev, double y_cur):
    cdef double[::1] gv = _coerce(g)
    cdef Py_ssize_t end = gv.shape[0] - 1, n, count = 0
    cdef double a = y_prev, b = y_cur, c, sgn, last_sign = 0.0
    if y_cur != 0.0:
        last_sign = 1.0 if y_cur > 0.0 else -1.0
    with nogil:
        for n in range(start, end):
            c = gv[n] * b - a
            a = b
            b = c
            if c != 0.0:
                sgn = 1.0 if c > 0.0 else -1.0
                if last_sign != 0.0 and sgn != last_sign:
                    count += 1
                last_sign = sgn
            if fabs(b) > _BIG:
                a *= _RESCALE
                b *= _RESCALE
    return count


def numerov_fill(g, Py_ssize_t start, double y_prev, double y_cur):
    cdef double[::1] gv = _coerce(g)
    cdef Py_ssize_t end = gv.shape[0] - 1, n, j
    res = _zeros(end - start + 1)
    cdef double[::1] out = res
    cdef double a = y_prev, b = y_cur, c
    out[0] = y_cur
    with nogil:
        for n in range(start, end):
            c = gv[n] * b - a
            a = b
            b = c
            out[n - start + 1] = c
            if fabs(b) > _FILL_BIG:
                for j in range(n - start + 2):
                    out[j] /= _FILL_BIG
                a /= _FILL_BIG
                b /= _FILL_BIG
    return res.tolist()
