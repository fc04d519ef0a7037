"""Bound-state spectra from the tridiagonal representation.

Two modes:

* linear: the recursion does not depend on E (Poschl-Teller), so the levels
  are eigenvalues of one Jacobi matrix mapped back through E(z);
* self-consistent: the recursion depends on E, and the levels are the roots
  of phi_j(E) = z(E) - z_j(E), where z_j(E) is the j-th Jacobi eigenvalue.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from trabound.errors import (
    BasisSizeJumpWarning,
    ConfigError,
    DomainError,
    EmptyBasisError,
    NoRootsFoundError,
    NoSignChangeError,
)
from trabound.numerics.recursion import jacobi_matrix
from trabound.numerics.roots import find_root_bracketed
from trabound.numerics.tridiag import symtridiag_eigenvalues
from trabound.solver.instances import (
    MultipoleInstance,
    PoschlTellerInstance,
    Potential27Instance,
    ProblemInstance,
)

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class SearchSpec:
    """Energy window and scan controls for the self-consistent mode."""

    E_min: float
    E_max: float
    grid_points: int = 400
    tol: float = 1e-14
    max_levels: int | None = None
    max_basis: int = 60
    min_segment_points: int = 16
    residual_tol: float = RESIDUAL_TOL

    def __post_init__(self) -> None:
        if not (math.isfinite(self.E_min) and math.isfinite(self.E_max)):
            raise ConfigError("energy window must be finite")
        if not self.E_min < self.E_max:
            raise ConfigError(f"need E_min < E_max, got [{self.E_min}, {self.E_max}]")
        if self.grid_points < 100:
            raise ConfigError(f"grid_points must be >= 100, got {self.grid_points}")
        if self.max_levels is not None and self.max_levels < 1:
            raise ConfigError("max_levels must be positive")
        if self.max_basis < 1:
            raise ConfigError("max_basis must be positive")


@dataclass(frozen=True)
class Level:
    k: int
    E: float
    z: float
    N: int
    residual: float


@dataclass
class SpectrumResult:
    kind: str
    mode: str
    levels: list[Level]
    diagnostics: dict = field(default_factory=dict)

    @property
    def energies(self) -> list[float]:
        return [lv.E for lv in self.levels]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "levels": [asdict(lv) for lv in self.levels],
            "diagnostics": self.diagnostics,
        }


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TRA_THREADS", "1")))
    except ValueError:
        return 1


def spectrum_linear(instance: PoschlTellerInstance) -> SpectrumResult:
    """All N+1 levels from the E-independent Jacobi matrix, ascending in E."""
    rec, _ = instance.build_recursion()
    zs = symtridiag_eigenvalues(jacobi_matrix(rec))
    energies = sorted(instance.E_of_z(z) for z in zs)
    levels = []
    for k, E in enumerate(energies):
        z = instance.z_of_E(E)
        nearest = min(zs, key=lambda v: abs(v - z))
        levels.append(Level(k, E, z, instance.N, abs(z - nearest)))
    return SpectrumResult(
        instance.kind, "linear", levels, {"N": instance.N, "nu": instance.nu}
    )


# --- self-consistent mode -------------------------------------------------


def _segments(instance: ProblemInstance, spec: SearchSpec) -> list[tuple[float, float]]:
    """Sub-intervals of the window with fixed N and no coefficient poles."""
    lo, hi = spec.E_min, spec.E_max
    cuts = instance.breakpoints(lo, hi) if hasattr(instance, "breakpoints") else []
    edges = [lo] + [c for c in cuts if lo < c < hi] + [hi]
    return list(zip(edges[:-1], edges[1:]))


def _scan_map(instance: ProblemInstance):
    """(to_var, from_var): the variable in which the scan grid is uniform."""
    if isinstance(instance, MultipoleInstance):
        # kappa = 1/sqrt(-2E); N and the poles are evenly spaced in kappa
        return (lambda E: 1.0 / math.sqrt(-2.0 * E)), (lambda k: -0.5 / (k * k))
    if isinstance(instance, Potential27Instance):
        return (lambda E: math.log(-E)), (lambda v: -math.exp(v))
    return (lambda E: E), (lambda v: v)


def _segment_grid(instance, a: float, b: float, count: int) -> list[float]:
    to_var, from_var = _scan_map(instance)
    va, vb = to_var(a), to_var(b)
    width = vb - va
    # stay a hair away from the ends, where couplers can blow up
    pad = 1e-9 * abs(width)
    vs = np.linspace(va + pad, vb - pad, count)
    out = sorted(from_var(v) for v in vs)
    return [E for E in out if a < E < b]


def _phi_all(instance: ProblemInstance, E: float) -> np.ndarray | None:
    try:
        rec, z = instance.build_recursion(E)
    except (EmptyBasisError, ZeroDivisionError):
        return None
    zs = np.asarray(symtridiag_eigenvalues(jacobi_matrix(rec)))
    return z - zs


def _phi_one(instance: ProblemInstance, j: int):
    def f(E: float) -> float:
        rec, z = instance.build_recursion(E)
        zs = symtridiag_eigenvalues(jacobi_matrix(rec))
        return z - zs[j]

    return f


def spectrum_selfconsistent(instance: ProblemInstance, spec: SearchSpec) -> SpectrumResult:
    """Scan the window segment by segment and polish every sign change.

    Raises NoRootsFoundError when nothing survives the residual check.
    """
    if not spec.E_max < 0.0:
        raise DomainError("the search window must lie below E = 0")
    segments = _segments(instance, spec)
    to_var, _ = _scan_map(instance)
    total = to_var(spec.E_max) - to_var(spec.E_min)
    found: list[tuple[float, float, int]] = []
    rejected = []
    jumps = []
    scanned = 0
    stop_reason = "window exhausted"
    pool = ThreadPoolExecutor(_threads()) if _threads() > 1 else None
    try:
        for a, b in segments:
            try:
                N = instance.basis_size(0.5 * (a + b))
            except EmptyBasisError:
                continue
            if N + 1 > spec.max_basis:
                stop_reason = f"basis size {N + 1} exceeds max_basis {spec.max_basis}"
                break
            share = (to_var(b) - to_var(a)) / total
            count = max(spec.min_segment_points, int(round(spec.grid_points * share)))
            grid = _segment_grid(instance, a, b, count)
            phis = list(pool.map(lambda E: _phi_all(instance, E), grid)) if pool else [
                _phi_all(instance, E) for E in grid
            ]
            scanned += len(grid)
            seg_roots = []
            for i in range(len(grid) - 1):
                p0, p1 = phis[i], phis[i + 1]
                if p0 is None or p1 is None:
                    continue
                for j in range(min(len(p0), len(p1))):
                    if not (np.isfinite(p0[j]) and np.isfinite(p1[j])):
                        continue
                    if p0[j] == 0.0:
                        seg_roots.append((grid[i], j))
                        continue
                    if p0[j] * p1[j] > 0.0:
                        continue
                    f = _phi_one(instance, j)
                    try:
                        E = find_root_bracketed(f, grid[i], grid[i + 1], tol=spec.tol)
                    except NoSignChangeError:
                        continue
                    seg_roots.append((E, j))
            for E, j in seg_roots:
                res = abs(_phi_one(instance, j)(E))
                if res > spec.residual_tol:
                    # a pole crossing, not a root
                    rejected.append({"E": E, "branch": j, "residual": res})
                    continue
                if min(E - a, b - E) <= 1e-6 * (b - a):
                    jumps.append(E)
                    warnings.warn(
                        f"level at E = {E} sits next to a basis-size change",
                        BasisSizeJumpWarning,
                        stacklevel=2,
                    )
                found.append((E, res, N))
            if spec.max_levels is not None and len(found) >= spec.max_levels:
                stop_reason = "max_levels reached"
                break
    finally:
        if pool is not None:
            pool.shutdown()

    found.sort()
    unique: list[tuple[float, float, int]] = []
    for item in found:
        if unique and abs(item[0] - unique[-1][0]) <= 1e-12 * max(1.0, abs(item[0])):
            continue
        unique.append(item)
    if spec.max_levels is not None:
        unique = unique[: spec.max_levels]
    if not unique:
        raise NoRootsFoundError(
            f"no self-consistent level in [{spec.E_min}, {spec.E_max}]"
        )
    levels = [
        Level(k, E, instance.z_of_E(E), N, res) for k, (E, res, N) in enumerate(unique)
    ]
    diag = {
        "segments": len(segments),
        "grid_evaluations": scanned,
        "rejected": rejected,
        "near_basis_jumps": jumps,
        "stop_reason": stop_reason,
    }
    return SpectrumResult(instance.kind, "selfconsistent", levels, diag)


def default_window(instance: ProblemInstance) -> tuple[float, float]:
    """A reasonable energy window when none is configured."""
    if isinstance(instance, MultipoleInstance):
        Z = instance.params.Z
        # below -2 Z^2 the basis is empty
        return -2.0 * Z * Z * (1.0 - 1e-9), -1e-6
    if isinstance(instance, Potential27Instance):
        rho = instance.params.rho
        xs = np.geomspace(1e-4, 1e4, 4000) / rho
        vmin = float(np.min(instance.potential(xs)))
        return min(vmin, -1e-3 * rho * rho), -1e-6 * rho * rho
    raise DomainError(f"{instance.kind} uses the linear mode")


def solve_spectrum(instance: ProblemInstance, spec: SearchSpec | None = None) -> SpectrumResult:
    if isinstance(instance, PoschlTellerInstance):
        return spectrum_linear(instance)
    if spec is None:
        lo, hi = default_window(instance)
        spec = SearchSpec(lo, hi)
    return spectrum_selfconsistent(instance, spec)
