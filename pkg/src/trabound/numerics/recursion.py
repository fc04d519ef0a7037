"""Three-term recursions z F_n = r_n F_n + s_n F_{n+1} + t_{n-1} F_{n-1}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from trabound._backend import kernels
from trabound.errors import FavardError, ZeroCouplerError
from trabound.numerics.tridiag import SymTridiag


@dataclass(frozen=True)
class ThreeTermRecursion:
    """Coefficients r_0..r_N, s_0..s_{N-1}, t_0..t_{N-1}.

    ``s_n`` couples F_n to F_{n+1} and ``t_n`` couples F_{n+1} back to F_n.
    """

    r: tuple[float, ...]
    s: tuple[float, ...]
    t: tuple[float, ...]

    def __init__(self, r: Sequence[float], s: Sequence[float], t: Sequence[float]):
        r = tuple(float(v) for v in r)
        s = tuple(float(v) for v in s)
        t = tuple(float(v) for v in t)
        if len(r) < 1:
            raise ValueError("recursion needs at least r_0")
        if len(s) != len(r) - 1 or len(t) != len(r) - 1:
            raise ValueError(
                f"expected {len(r) - 1} couplers, got s:{len(s)} t:{len(t)}"
            )
        if not all(math.isfinite(v) for v in r + s + t):
            raise ValueError("recursion coefficients must be finite")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    @property
    def size(self) -> int:
        """Number of basis functions N + 1."""
        return len(self.r)

    @property
    def degree(self) -> int:
        return len(self.r) - 1

    def favard_violations(self) -> list[int]:
        return [n for n, (s, t) in enumerate(zip(self.s, self.t)) if not s * t > 0.0]

    @property
    def favard_ok(self) -> bool:
        return not self.favard_violations()


def _check_couplers(rec: ThreeTermRecursion) -> None:
    zeros = [n for n, s in enumerate(rec.s) if s == 0.0]
    if zeros:
        raise ZeroCouplerError(f"s_n = 0 at n = {zeros}")


def recursion_polynomials_scaled(
    rec: ThreeTermRecursion, z: float
) -> tuple[list[float], list[float]]:
    """F_n(z) as mantissas and log-scales, F_n = mant[n] * exp(logscale[n])."""
    _check_couplers(rec)
    return kernels.recursion_scaled(rec.r, rec.s, rec.t, float(z))


def recursion_polynomials(rec: ThreeTermRecursion, z: float) -> list[float]:
    """F_0(z) .. F_N(z) with F_0 = 1 and F_{-1} = 0."""
    mant, logs = recursion_polynomials_scaled(rec, z)
    if not any(logs):
        return mant
    return [m * math.exp(ls) for m, ls in zip(mant, logs)]


def terminal_value(rec: ThreeTermRecursion, z: float) -> float:
    """The unnormalised next term (z - r_N) F_N - t_{N-1} F_{N-1}.

    Equals s_N F_{N+1}(z) for any nonzero s_N, so its zeros are the zeros of
    F_{N+1}. Mantissa-only: the common log-scale is dropped.
    """
    mant, logs = recursion_polynomials_scaled(rec, z)
    n = rec.degree
    value = (z - rec.r[n]) * mant[n]
    if n > 0:
        prev = mant[n - 1] * math.exp(logs[n - 1] - logs[n])
        value -= rec.t[n - 1] * prev
    return value


def jacobi_matrix(rec: ThreeTermRecursion) -> SymTridiag:
    """Symmetrise the recursion: diagonal r_n, off-diagonal sqrt(s_n t_n)."""
    bad = rec.favard_violations()
    if bad:
        raise FavardError(bad)
    return SymTridiag(rec.r, [math.sqrt(s * t) for s, t in zip(rec.s, rec.t)])
