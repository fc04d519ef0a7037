"""Independent bound-state oracle: Numerov shooting with node counting.

Uniform grid, three-point Numerov stencil for psi'' = 2 (V - E) psi. The
level with k nodes is bracketed by counting sign changes of the outward
solution, then polished by matching the outward and inward solutions at the
outermost classical turning point. Singular ends start from the power law
x^s with s = 1/2 + sqrt(1/4 + 2c), c = lim V (x - end)^2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from trabound._backend import kernels
from trabound.errors import (
    ConfigError,
    DomainError,
    GridTooCoarseWarning,
    NoBoundStateError,
    NoSignChangeError,
)
from trabound.numerics.roots import find_root_bracketed
from trabound.solver.wavefunctions import WavefunctionTable, node_count

_F_MAX = 0.5  # beyond h^2 Q / 12 = 1/2 the Numerov weight loses its sign


@dataclass(frozen=True)
class NumerovGrid:
    """Grid controls. ``x_max`` caps an infinite domain; None picks one."""

    points: int = 20000
    x_max: float | None = None

    def __post_init__(self) -> None:
        if self.points < 16:
            raise ConfigError(f"points must be >= 16, got {self.points}")
        if self.x_max is not None and not self.x_max > 0.0:
            raise ConfigError("x_max must be positive")


@dataclass
class NumerovResult:
    E: float
    x: np.ndarray
    psi: np.ndarray
    k: int
    nodes: int
    E_coarse: float
    E_fine: float
    mismatch: float
    points: int
    extra: dict = field(default_factory=dict)

    @property
    def richardson_delta(self) -> float:
        return abs(self.E_fine - self.E_coarse)

    def as_table(self) -> WavefunctionTable:
        return WavefunctionTable(self.x, self.psi, self.k, self.E, 1.0, self.nodes, {"oracle": "numerov"})


@dataclass(frozen=True)
class _End:
    kind: str  # "regular" | "power" | "barrier" | "cutoff"
    c: float = 0.0
    s: float = 1.0
    b1: float = 0.0  # lim V (x - end) for a regular end


def _classify(V: Callable, end: float, inward: float, width: float) -> _End:
    """Power-law behaviour of psi next to a finite end point."""
    d1 = 1e-6 * width
    d2 = 2e-6 * width
    c1 = float(V(end + inward * d1)) * d1 * d1
    c2 = float(V(end + inward * d2)) * d2 * d2
    if (abs(c1) < 1e-8 and abs(c2) < 1e-8) or (abs(c1) < 1e-3 and abs(c2) > 1.5 * abs(c1)):
        # V (x - end)^2 -> 0: at most a Coulomb-like singularity
        d0 = 1e-9 * width
        return _End("regular", 0.0, 1.0, float(V(end + inward * d0)) * d0)
    if abs(c1 - c2) <= 0.05 * max(abs(c1), abs(c2)) and c1 > -0.125:
        return _End("power", c1, 0.5 + math.sqrt(0.25 + 2.0 * c1))
    if c1 > 0.0 and c2 > 0.0 and c1 > c2:
        # grows faster than 1/x^2: an impenetrable barrier
        return _End("barrier", math.inf, math.inf)
    raise DomainError(f"end point behaviour V ~ {c1}/x^2 is not supported")


class _Problem:
    def __init__(self, V, a: float, b: float, left: _End, right: _End, points: int):
        self.V = V
        self.a, self.b = a, b
        self.left, self.right = left, right
        self.M = points + (points % 2)  # Simpson wants an even count
        self.h = (b - a) / self.M
        self.x = a + self.h * np.arange(self.M + 1)
        self.Vx = np.full(self.M + 1, np.nan)
        self.Vx[1 : self.M] = V(self.x[1 : self.M])
        if right.kind == "cutoff":
            self.Vx[self.M] = float(V(self.x[self.M]))
        if not np.all(np.isfinite(self.Vx[1 : self.M])):
            raise DomainError("potential is not finite inside the domain")

    # -- pieces that depend on E
    def weights(self, E: float):
        f = self.h * self.h * 2.0 * (self.Vx - E) / 12.0
        w = 1.0 - f
        with np.errstate(invalid="ignore", divide="ignore"):
            g = 12.0 / w - 10.0
        ok = np.where(f[1 : self.M] < _F_MAX)[0] + 1
        if ok.size < 8:
            raise GridTooCoarseWarning  # handled by caller
        return f, w, g, int(ok[0]), int(ok[-1])

    def _seed(self, end: _End, w, i_edge: int, step: int):
        """(start, y_prev, y_cur) for integration moving in direction ``step``."""
        edge = 0 if step > 0 else self.M
        first = edge + step
        if end.kind in ("barrier", "cutoff"):
            return i_edge + step, 0.0, w[i_edge + step]
        if i_edge == first and (end.kind == "regular" or end.s >= 2.0 - 1e-12):
            # psi(edge) = 0; y there keeps the finite limit of -h^2 Q psi / 12
            if end.kind == "regular":
                y0 = -self.h * end.b1 / 6.0
            else:
                y0 = -end.c / 6.0 if abs(end.s - 2.0) < 1e-12 else 0.0
            return first, y0, w[first]
        j0 = abs(i_edge - edge)
        ratio = ((j0 + 1.0) / j0) ** end.s
        return i_edge + step, w[i_edge], w[i_edge + step] * ratio

    def count(self, E: float) -> int:
        f, w, g, i0, i1 = self.weights(E)
        start, yp, yc = self._seed(self.left, w, i0, +1)
        end = min(i1 + 1, self.M)
        return kernels.numerov_count(g[: end + 1], start, yp, yc)

    def _outward(self, E, upto):
        f, w, g, i0, i1 = self.weights(E)
        start, yp, yc = self._seed(self.left, w, i0, +1)
        y = np.zeros(self.M + 1)
        vals = kernels.numerov_fill(g[: upto + 1], start, yp, yc)
        y[start : upto + 1] = vals
        y[start - 1] = yp
        return y, w

    def _inward(self, E, downto):
        f, w, g, i0, i1 = self.weights(E)
        if self.right.kind == "cutoff":
            i_edge = min(i1, self.M - 1)
        else:
            i_edge = i1
        start, yp, yc = self._seed(self.right, w, i_edge, -1)
        rev_g = g[::-1]
        rs = self.M - start
        vals = kernels.numerov_fill(rev_g[: self.M - downto + 1], rs, yp, yc)
        y = np.zeros(self.M + 1)
        y[downto : start + 1] = vals[::-1]
        y[start + 1] = yp
        return y

    def match_index(self, E: float) -> int:
        f, w, g, i0, i1 = self.weights(E)
        lo, hi = i0 + 2, i1 - 2
        inside = np.where(self.Vx[lo : hi + 1] < E)[0]
        if inside.size == 0:
            return lo + int(np.nanargmin(self.Vx[lo : hi + 1]))
        return lo + int(inside[-1])

    def mismatch(self, E: float, m: int) -> float:
        yo, _ = self._outward(E, m + 1)
        yi = self._inward(E, m - 1)
        return (yo[m + 1] - yo[m - 1]) / yo[m] - (yi[m + 1] - yi[m - 1]) / yi[m]

    def state(self, E: float, m: int):
        yo, w = self._outward(E, m + 1)
        yi = self._inward(E, m - 1)
        yi *= yo[m] / yi[m]
        y = np.where(np.arange(self.M + 1) <= m, yo, yi)
        with np.errstate(invalid="ignore", divide="ignore"):
            psi = np.where(np.isfinite(w) & (w > 0.0), y / w, 0.0)
        psi[0] = psi[self.M] = 0.0
        norm2 = _simpson(psi * psi, self.h)
        psi /= math.sqrt(norm2)
        # positive next to the lower end
        nz = psi[np.abs(psi) > 1e-12 * np.max(np.abs(psi))]
        if nz.size and nz[0] < 0.0:
            psi = -psi
        d = (yo[m + 1] - yo[m - 1]) / (2.0 * self.h * yo[m]) - (yi[m + 1] - yi[m - 1]) / (2.0 * self.h * yi[m])
        return psi, d


def _simpson(y: np.ndarray, h: float) -> float:
    return float(h / 3.0 * (y[0] + y[-1] + 4.0 * np.sum(y[1:-1:2]) + 2.0 * np.sum(y[2:-1:2])))


def _bracket_level(prob: _Problem, k: int, E_lo: float, E_hi: float, confining: bool):
    if prob.count(E_lo) > k:
        raise DomainError("lower energy bound already has too many nodes")
    if prob.count(E_hi) <= k:
        if not confining:
            raise NoBoundStateError(f"fewer than {k + 1} bound states below E = {E_hi}")
        span = max(1.0, E_hi - E_lo)
        for _ in range(60):
            E_hi += span
            span *= 2.0
            if prob.count(E_hi) > k:
                break
        else:
            raise NoBoundStateError(f"could not bracket level {k}")
    for _ in range(200):
        mid = 0.5 * (E_lo + E_hi)
        if mid <= E_lo or mid >= E_hi:
            break
        if prob.count(mid) > k:
            E_hi = mid
        else:
            E_lo = mid
    return E_lo, E_hi


def _polish(prob: _Problem, E_c: float, tol: float) -> tuple[float, int]:
    m = prob.match_index(E_c)
    fn = lambda E: prob.mismatch(E, m)
    scale = max(1.0, abs(E_c))
    delta = 1e-12 * scale
    f_c = fn(E_c)
    if f_c == 0.0:
        return E_c, m
    for _ in range(40):
        lo, hi = E_c - delta, E_c + delta
        flo, fhi = fn(lo), fn(hi)
        if np.isfinite(flo) and np.isfinite(fhi) and flo * fhi < 0.0:
            try:
                return find_root_bracketed(fn, lo, hi, tol=max(1e-15 * scale, 1e-3 * tol)), m
            except NoSignChangeError:
                break
        delta *= 2.0
        if delta > 1e-4 * scale:
            break
    return E_c, m


def _solve(prob: _Problem, k: int, tol: float, confining: bool, E_top: float):
    E_lo = float(np.nanmin(prob.Vx[1 : prob.M]))
    lo, hi = _bracket_level(prob, k, E_lo, E_top, confining)
    E_c = 0.5 * (lo + hi)
    E, m = _polish(prob, E_c, tol)
    psi, d = prob.state(E, m)
    return E, psi, d, m


def numerov_bound_state(
    V: Callable,
    domain: tuple[float, float],
    k: int,
    grid: NumerovGrid | int | None = None,
    tol: float = 1e-8,
    richardson: bool = True,
) -> NumerovResult:
    """The k-th bound state of -psi''/2 + V psi = E psi on ``domain``.

    ``V`` must accept numpy arrays. With ``richardson`` the problem is solved
    on the grid and on a grid twice as fine; the returned energy is the
    fourth-order extrapolation and GridTooCoarseWarning fires when the two
    solves differ by more than ``tol``.
    """
    if k < 0:
        raise DomainError("k must be >= 0")
    if isinstance(grid, int):
        grid = NumerovGrid(points=grid)
    grid = grid or NumerovGrid()
    a, b = float(domain[0]), float(domain[1])
    if not math.isfinite(a):
        raise DomainError("the lower end must be finite")
    infinite = math.isinf(b)
    if infinite:
        x_max = grid.x_max if grid.x_max is not None else 60.0
        width = x_max - a
    else:
        width = b - a
        x_max = b
    left = _classify(V, a, +1.0, width)
    right = _End("cutoff") if infinite else _classify(V, b, -1.0, width)
    points = grid.points
    auto = infinite and grid.x_max is None

    for attempt in range(8):
        prob = _Problem(V, a, x_max, left, right, points)
        E_top = prob.Vx[prob.M] if infinite else 0.0
        try:
            E, psi, d, m = _solve(prob, k, tol, not infinite, E_top)
        except NoBoundStateError:
            # the box may simply be too small for a shallow level
            if not auto or attempt == 7:
                raise
            x_max = a + 2.0 * (x_max - a)
            points *= 2
            continue
        if not auto:
            break
        # the cutoff should sit ~35 decay lengths past the turning point
        kappa = math.sqrt(max(2.0 * (prob.Vx[prob.M] - E), 1e-300))
        need = prob.x[m] + 35.0 / kappa
        if need <= x_max:
            break
        scale = 1.25 * need / x_max
        x_max = a + (x_max - a) * scale
        points = int(math.ceil(points * scale))

    E_coarse = E_fine = E
    extra = {"x_max": x_max, "match_x": float(prob.x[m])}
    if richardson:
        fine = _Problem(V, a, x_max, left, right, 2 * prob.M)
        E_fine, psi_f, d_f, m_f = _solve(fine, k, tol, not infinite, fine.Vx[fine.M] if infinite else 0.0)
        E_coarse = E
        if abs(E_fine - E_coarse) > tol:
            warnings.warn(
                f"doubling the grid moved E_{k} by {abs(E_fine - E_coarse):.3e} > tol {tol:.1e}",
                GridTooCoarseWarning,
                stacklevel=2,
            )
        E = E_fine + (E_fine - E_coarse) / 15.0
        prob, psi, d = fine, psi_f, d_f
    nodes = node_count(psi)
    return NumerovResult(E, prob.x.copy(), psi, k, nodes, E_coarse, E_fine, d, prob.M, extra)
