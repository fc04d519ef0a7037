"""The three worked potentials, the dipole quantum number gamma, and the
exact Poschl-Teller reference solution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from trabound.errors import DomainError, SupercriticalDipoleError, TruncationError
from trabound.numerics.tridiag import SymTridiag, sturm_count, symtridiag_eigenvalue
from trabound.polynomials.families import classical_jacobi_eval, strict_floor

# --- gamma from the dipole matrix ------------------------------------------


@dataclass(frozen=True)
class GammaResult:
    gamma: float
    eigenvalue: float  # (gamma + 1/2)^2
    size: int  # truncation that met the tolerance
    trace: tuple[tuple[int, float], ...]  # (M, gamma_M) ladder
    negative_count: int  # eigenvalues below zero at the final truncation


def dipole_matrix(d: float, m: int, size: int) -> SymTridiag:
    """Leading ``size`` x ``size`` block of the dipole angular matrix.

    Diagonal (i+m+1/2)^2; coupling between rows i-1 and i is
    -d sqrt(i(i+2m) / ((i+m)^2 - 1/4)), i = 1, 2, ...
    """
    if size < 1:
        raise DomainError("matrix size must be >= 1")
    diag = [(i + m + 0.5) ** 2 for i in range(size)]
    off = [
        -d * math.sqrt(i * (i + 2.0 * m) / ((i + m) ** 2 - 0.25))
        for i in range(1, size)
    ]
    return SymTridiag(diag, off)


def _lowest_positive(mat: SymTridiag) -> tuple[float, int]:
    neg = sturm_count(mat, 0.0)
    if neg >= mat.size:
        raise SupercriticalDipoleError("dipole matrix has no positive eigenvalue")
    value = symtridiag_eigenvalue(mat, neg)
    if value <= 0.0:  # an exact zero eigenvalue is not positive
        if neg + 1 >= mat.size:
            raise SupercriticalDipoleError("dipole matrix has no positive eigenvalue")
        value = symtridiag_eigenvalue(mat, neg + 1)
    return value, neg


def solve_dipole_gamma(
    d: float, m: int, size: int = 16, tol: float = 1e-12, max_size: int = 1024
) -> GammaResult:
    """gamma = sqrt(lambda*) - 1/2 from the lowest positive eigenvalue lambda*.

    The truncation starts at ``size`` and doubles until successive gammas
    differ by less than ``tol``. If the count of negative eigenvalues keeps
    growing with the truncation the dipole is reported as supercritical;
    otherwise non-convergence raises TruncationError.
    """
    if size < 2:
        raise DomainError("truncation size must be >= 2")
    if m < 0 or int(m) != m:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    if not math.isfinite(d):
        raise DomainError("dipole moment must be finite")
    trace: list[tuple[int, float]] = []
    negs: list[int] = []
    prev = None
    M = size
    while True:
        lam, neg = _lowest_positive(dipole_matrix(d, m, M))
        g = math.sqrt(lam) - 0.5
        trace.append((M, g))
        negs.append(neg)
        if prev is not None and abs(g - prev) < tol:
            return GammaResult(g, lam, M, tuple(trace), neg)
        prev = g
        if M * 2 > max_size:
            break
        M *= 2
    if len(negs) >= 2 and negs[-1] > negs[-2]:
        raise SupercriticalDipoleError(
            f"supercritical dipole d={d}: negative eigenvalues keep appearing "
            f"under refinement ({negs[-2]} -> {negs[-1]}); gamma is undefined"
        )
    raise TruncationError(
        f"gamma did not converge to {tol} by truncation {M}; last values {trace[-2:]}"
    )


def gamma_from_dipole(
    d: float, m: int, size: int = 16, tol: float = 1e-12, max_size: int = 1024
) -> float:
    return solve_dipole_gamma(d, m, size, tol, max_size).gamma


# --- parameter types --------------------------------------------------------


@dataclass(frozen=True)
class MultipoleParams:
    """Charge Z, dipole d, quadrupole q, azimuthal m, angular parameter eta.

    ``gamma`` comes from the dipole matrix unless ``gamma_override`` is set.
    """

    Z: float
    d: float
    q: float
    m: int
    eta: float
    gamma_tol: float = 1e-12
    gamma_override: float | None = None

    def __post_init__(self) -> None:
        if not self.Z > 0.0:
            raise DomainError(f"need Z > 0, got {self.Z}")
        if not -0.5 <= self.eta <= 1.0:
            raise DomainError(f"need -1/2 <= eta <= 1, got {self.eta}")
        if self.m < 0 or int(self.m) != self.m:
            raise DomainError(f"m must be a non-negative integer, got {self.m}")

    @property
    def Q(self) -> float:
        return self.eta * self.q

    @cached_property
    def gamma_result(self) -> GammaResult | None:
        if self.gamma_override is not None:
            return None
        return solve_dipole_gamma(self.d, self.m, tol=self.gamma_tol)

    @property
    def gamma(self) -> float:
        if self.gamma_override is not None:
            return float(self.gamma_override)
        return self.gamma_result.gamma


@dataclass(frozen=True)
class Potential27Params:
    """Inverse-square-singular well rho^2/((rho x)^2+2) [C/(rho x)^2 - D/((rho x)^2+2) - 4A]."""

    rho: float
    A: float
    C: float
    D: float
    bound_only: bool = True

    def __post_init__(self) -> None:
        if not self.rho > 0.0:
            raise DomainError(f"need rho > 0, got {self.rho}")
        if not self.C > -0.25:
            raise DomainError(f"need C > -1/4, got {self.C}")
        if not self.D > -1.0:
            raise DomainError(f"need D > -1, got {self.D}")
        if self.bound_only and not self.A > 0.0:
            raise DomainError(f"bound-state mode needs A > 0, got {self.A}")

    @property
    def mu(self) -> float:
        return math.sqrt(self.C + 0.25)

    @property
    def nu(self) -> float:
        return -math.sqrt(self.D + 1.0)

    @property
    def N(self) -> int:
        return strict_floor(-(self.mu + self.nu + 1.0) / 2.0)


@dataclass(frozen=True)
class PoschlTellerParams:
    """V0/sin^2(rho x) + V1/cos^2(rho x) with basis parameter nu."""

    rho: float
    V0: float
    V1: float
    nu: float = -25.0
    mu: float = field(init=False)
    sigma: float = field(init=False)

    def __post_init__(self) -> None:
        if not self.rho > 0.0:
            raise DomainError(f"need rho > 0, got {self.rho}")
        floor_v = -self.rho**2 / 8.0
        if not (self.V0 > floor_v and self.V1 > floor_v):
            raise DomainError(f"need V0, V1 > -rho^2/8 = {floor_v}")
        mu = math.sqrt(0.25 + 2.0 * self.V0 / self.rho**2)
        sigma = math.sqrt(0.25 + 2.0 * self.V1 / self.rho**2)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma", sigma)
        if not self.nu < 0.0:
            raise DomainError(f"nu must be negative, got {self.nu}")
        if strict_floor(-(mu + self.nu + 1.0) / 2.0) < 0:
            raise DomainError(f"nu = {self.nu} leaves no basis functions (need nu < -mu-1)")

    @property
    def N(self) -> int:
        return strict_floor(-(self.mu + self.nu + 1.0) / 2.0)

    def with_nu(self, nu: float) -> "PoschlTellerParams":
        return PoschlTellerParams(self.rho, self.V0, self.V1, nu)


# --- potentials ------------------------------------------------------------


def domain(p) -> tuple[float, float]:
    if isinstance(p, PoschlTellerParams):
        return 0.0, math.pi / (2.0 * p.rho)
    if isinstance(p, (MultipoleParams, Potential27Params)):
        return 0.0, math.inf
    raise TypeError(f"unsupported parameter type {type(p).__name__}")


def potential_value(p, x):
    """V(x) for one of the three parameter types; ``x`` may be an array."""
    lo, hi = domain(p)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= lo) or np.any(xa >= hi):
        raise DomainError(f"x must lie strictly inside ({lo}, {hi})")
    if isinstance(p, MultipoleParams):
        g = p.gamma
        v = g * (g + 1.0) / (2.0 * xa**2) - p.Z / xa + p.Q / xa**3
    elif isinstance(p, Potential27Params):
        u = (p.rho * xa) ** 2
        v = p.rho**2 / (u + 2.0) * (p.C / u - p.D / (u + 2.0) - 4.0 * p.A)
    else:
        s = np.sin(p.rho * xa)
        c = np.cos(p.rho * xa)
        v = p.V0 / s**2 + p.V1 / c**2
    return float(v) if v.ndim == 0 else v


# --- exact Poschl-Teller reference -----------------------------------------


def pt_exact_energy(p: PoschlTellerParams, k: int) -> float:
    if k < 0:
        raise DomainError("k must be >= 0")
    return 2.0 * p.rho**2 * (k + (p.mu + p.sigma + 1.0) / 2.0) ** 2


def pt_exact_wavefunction(p: PoschlTellerParams, k: int, x):
    """Unnormalised exact eigenfunction sin^{mu+1/2} cos^{sigma+1/2} P_k(cos 2 rho x)."""
    lo, hi = domain(p)
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= lo) or np.any(xa >= hi):
        raise DomainError(f"x must lie strictly inside ({lo}, {hi})")
    s = np.sin(p.rho * xa)
    c = np.cos(p.rho * xa)
    jac = classical_jacobi_eval(p.mu, p.sigma, k, np.cos(2.0 * p.rho * xa))
    v = s ** (p.mu + 0.5) * c ** (p.sigma + 0.5) * jac
    return float(v) if np.ndim(v) == 0 else v
