"""Wavefunction reconstruction, normalization, overlaps and node counts."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from trabound.errors import DomainError, GridMismatchError
from trabound.numerics.quadrature import integrate
from trabound.numerics.recursion import ThreeTermRecursion, recursion_polynomials_scaled
from trabound.solver.instances import (
    MultipoleInstance,
    PoschlTellerInstance,
    ProblemInstance,
)


@dataclass
class WavefunctionTable:
    """Sampled, normalized psi_k on a grid."""

    x: np.ndarray
    psi: np.ndarray
    k: int | None
    E: float
    f0: float
    nodes: int
    metadata: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.x = np.asarray(self.x, dtype=float)
        self.psi = np.asarray(self.psi, dtype=float)
        if self.x.shape != self.psi.shape or self.x.ndim != 1:
            raise ValueError("x and psi must be 1-D arrays of equal length")


def expansion_coefficients(instance: ProblemInstance, E: float) -> np.ndarray:
    """F_0 .. F_N at the energy E, with F_0 = 1."""
    rec, z = instance.build_recursion(E)
    if isinstance(instance, PoschlTellerInstance):
        z = instance.z_of_E(E)
    mant, logs = recursion_polynomials_scaled(rec, z)
    return np.asarray(mant) * np.exp(np.asarray(logs))


def g_factors(rec: ThreeTermRecursion) -> np.ndarray:
    """G_n = prod_{m<n} t_m / s_m, the gauge taking F_n to its monic-coupler twin.

    With this choice F_n = G_n P_n where P_n obeys the same recursion with the
    two couplers swapped.
    """
    out = np.ones(rec.size)
    for n in range(1, rec.size):
        out[n] = out[n - 1] * rec.t[n - 1] / rec.s[n - 1]
    return out


def swapped_recursion(rec: ThreeTermRecursion) -> ThreeTermRecursion:
    return ThreeTermRecursion(list(rec.r), list(rec.t), list(rec.s))


NODE_FLOOR = 1e-8


def node_count(psi, rel_floor: float = NODE_FLOOR) -> int:
    """Sign changes of the samples.

    Samples with |psi| <= rel_floor * max|psi| count as zero: a lobe that
    small carries less than rel_floor^2 of the norm, below what the
    normalization resolves.
    """
    vals = np.asarray(psi, dtype=float)
    peak = float(np.max(np.abs(vals))) if vals.size else 0.0
    keep = np.abs(vals) > rel_floor * peak
    signs = np.sign(vals[keep])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def default_grid(instance: ProblemInstance, E: float, points: int = 2000) -> np.ndarray:
    lo, hi = instance.domain()
    if math.isinf(hi):
        # psi decays like exp(-sqrt(-2E) x); 40 decay lengths is plenty
        hi = 40.0 / math.sqrt(-2.0 * E)
    h = (hi - lo) / points
    return lo + h * np.arange(1, points + 1) - (0.5 * h if not math.isinf(instance.domain()[1]) else 0.0)


def _norm_squared(instance: ProblemInstance, E: float, F: np.ndarray, tol: float) -> float:
    lo, hi = instance.domain()

    def f(x: float) -> float:
        return float(instance.psi_unnormalized(E, F, np.array([x]))[0]) ** 2

    if math.isinf(hi):
        # split where the integrand is largest so the tail map stays gentle
        scale = 1.0 / math.sqrt(-2.0 * E)
        return integrate(f, lo, scale, tol=tol) + integrate(f, scale, hi, tol=tol)
    mid = 0.5 * (lo + hi)
    return integrate(f, lo, mid, tol=tol) + integrate(f, mid, hi, tol=tol)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TRA_THREADS", "1")))
    except ValueError:
        return 1


def wavefunction(
    instance: ProblemInstance,
    E: float,
    x_grid=None,
    k: int | None = None,
    tol: float = 1e-11,
) -> WavefunctionTable:
    """Normalized psi at energy E, positive just above the lower domain end."""
    lo, hi = instance.domain()
    x = default_grid(instance, E) if x_grid is None else np.asarray(x_grid, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise DomainError("x_grid must be a non-empty 1-D array")
    if np.any(x < lo) or np.any(x > hi):
        raise DomainError(f"x_grid must lie inside [{lo}, {hi}]")
    F = expansion_coefficients(instance, E)
    norm2 = _norm_squared(instance, E, F, tol)
    if not norm2 > 0.0:
        raise DomainError(f"wavefunction at E = {E} has zero norm")
    f0 = 1.0 / math.sqrt(norm2)
    sign = instance.boundary_sign(E, F)
    if _threads() > 1 and x.size > 4096:
        chunks = np.array_split(x, _threads())
        with ThreadPoolExecutor(_threads()) as pool:
            parts = list(pool.map(lambda c: instance.psi_unnormalized(E, F, c), chunks))
        raw = np.concatenate(parts)
    else:
        raw = instance.psi_unnormalized(E, F, x)
    psi = sign * f0 * raw
    meta = dict(instance.metadata(E))
    meta["coefficients"] = F.tolist()
    return WavefunctionTable(x, psi, k, E, f0, node_count(psi), meta)


def _trapz(y: np.ndarray, x: np.ndarray) -> float:
    return float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(x)))


def overlap(a: WavefunctionTable, b: WavefunctionTable, rel_tol: float = 1e-9) -> float:
    """Normalized overlap on the finer of the two grids."""
    span_a = (a.x[0], a.x[-1])
    span_b = (b.x[0], b.x[-1])
    width = max(span_a[1] - span_a[0], span_b[1] - span_b[0])
    if abs(span_a[0] - span_b[0]) > rel_tol * width or abs(span_a[1] - span_b[1]) > rel_tol * width:
        raise GridMismatchError(f"domains differ: {span_a} vs {span_b}")
    if a.x.size >= b.x.size:
        x, pa, pb = a.x, a.psi, np.interp(a.x, b.x, b.psi)
    else:
        x, pa, pb = b.x, np.interp(b.x, a.x, a.psi), b.psi
    num = _trapz(pa * pb, x)
    den = math.sqrt(_trapz(pa * pa, x) * _trapz(pb * pb, x))
    if den == 0.0:
        raise DomainError("overlap with a zero function")
    return max(-1.0, min(1.0, num / den))


def exact_pt_table(instance: PoschlTellerInstance, k: int, x_grid) -> WavefunctionTable:
    """Normalized exact Poschl-Teller state on the same footing as ``wavefunction``."""
    from trabound.problems.models import pt_exact_energy, pt_exact_wavefunction

    p = instance.params
    lo, hi = instance.domain()
    x = np.asarray(x_grid, dtype=float)
    mid = 0.5 * (lo + hi)

    def f(t: float) -> float:
        return float(pt_exact_wavefunction(p, k, t)) ** 2

    norm2 = integrate(f, lo, mid, tol=1e-12) + integrate(f, mid, hi, tol=1e-12)
    inside = (x > lo) & (x < hi)
    psi = np.zeros_like(x)
    psi[inside] = pt_exact_wavefunction(p, k, x[inside]) / math.sqrt(norm2)
    # P_k(cos 2 rho x) -> P_k(1) > 0 as x -> 0, so the sign already matches
    return WavefunctionTable(x, psi, k, pt_exact_energy(p, k), 1.0 / math.sqrt(norm2), node_count(psi))
