"""Symmetric tridiagonal matrices and their eigenvalues (Sturm bisection)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from trabound._backend import kernels


@dataclass(frozen=True)
class SymTridiag:
    """Diagonal ``d`` (length M) and off-diagonal ``e`` (length M-1)."""

    d: tuple[float, ...]
    e: tuple[float, ...]

    def __init__(self, d: Sequence[float], e: Sequence[float]):
        d = tuple(float(v) for v in d)
        e = tuple(float(v) for v in e)
        if len(d) < 1:
            raise ValueError("SymTridiag needs at least one diagonal entry")
        if len(e) != len(d) - 1:
            raise ValueError(f"off-diagonal length {len(e)} != {len(d) - 1}")
        if not all(math.isfinite(v) for v in d + e):
            raise ValueError("SymTridiag entries must be finite")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "e", e)

    @property
    def size(self) -> int:
        return len(self.d)

    def leading(self, k: int) -> "SymTridiag":
        """Leading k x k principal submatrix."""
        return SymTridiag(self.d[:k], self.e[: k - 1])

    def to_dense(self) -> list[list[float]]:
        m = self.size
        out = [[0.0] * m for _ in range(m)]
        for i in range(m):
            out[i][i] = self.d[i]
        for i in range(m - 1):
            out[i][i + 1] = out[i + 1][i] = self.e[i]
        return out


def sturm_count(m: SymTridiag, x: float) -> int:
    """Number of eigenvalues of ``m`` strictly below ``x``."""
    return kernels.sturm_count(m.d, [v * v for v in m.e], float(x))


def symtridiag_eigenvalues(m: SymTridiag) -> list[float]:
    """All eigenvalues, ascending, by Sturm-sequence bisection."""
    return kernels.tridiag_eigvalsh(m.d, m.e)


def symtridiag_eigenvalue(m: SymTridiag, index: int) -> float:
    """The ``index``-th smallest eigenvalue (0-based)."""
    if not 0 <= index < m.size:
        raise IndexError(f"eigenvalue index {index} out of range for size {m.size}")
    return kernels.tridiag_eigval_index(m.d, m.e, index)
