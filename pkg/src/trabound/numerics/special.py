"""Log-gamma with sign, and the Pochhammer symbol."""

from __future__ import annotations

import math

from trabound.errors import PoleError


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def lgamma(x: float) -> tuple[float, int]:
    """Return ``(ln|Gamma(x)|, sign(Gamma(x)))``.

    Raises PoleError at x = 0, -1, -2, ...
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"lgamma needs a finite argument, got {x}")
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at x = {x}")
    value = math.lgamma(x)
    if x > 0.0:
        return value, 1
    # Gamma alternates sign between consecutive negative integers; it is
    # negative on (-1, 0), positive on (-2, -1), ...
    return value, (-1 if int(math.floor(x)) % 2 else 1)


def gamma_ratio(num: list[float], den: list[float]) -> float:
    """prod Gamma(num) / prod Gamma(den), accumulated in log space."""
    log_total = 0.0
    sign = 1
    for a in num:
        v, s = lgamma(a)
        log_total += v
        sign *= s
    for a in den:
        v, s = lgamma(a)
        log_total -= v
        sign *= s
    return sign * math.exp(log_total)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.

    Overflow propagates as +-inf rather than raising.
    """
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out
