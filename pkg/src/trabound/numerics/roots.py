"""Bracketed scalar root finding."""

from __future__ import annotations

import math
from typing import Callable

from trabound.errors import NoSignChangeError, NonFiniteError


def _eval(f: Callable[[float], float], x: float) -> float:
    v = float(f(x))
    if not math.isfinite(v):
        raise NonFiniteError(f"f({x!r}) = {v}")
    return v


def find_root_bracketed(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-14,
    max_iter: int = 300,
) -> float:
    """Root of ``f`` in [lo, hi] by bisection with a secant step per iteration.

    The secant point is taken only when it falls strictly inside the current
    bracket, so the bracket always shrinks and convergence is guaranteed.
    Stops when the bracket is no wider than ``tol``.
    """
    lo, hi = float(lo), float(hi)
    if lo > hi:
        lo, hi = hi, lo
    flo = _eval(f, lo)
    fhi = _eval(f, hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NoSignChangeError(f"f({lo})={flo} and f({hi})={fhi} share a sign")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        # secant candidate
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if lo < x < hi:
            fx = _eval(f, x)
            if fx == 0.0:
                return x
            if (fx > 0.0) == (flo > 0.0):
                lo, flo = x, fx
            else:
                hi, fhi = x, fx
            if hi - lo <= tol:
                break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = _eval(f, mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return lo if abs(flo) <= abs(fhi) else hi
