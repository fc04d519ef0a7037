"""Problem instances: basis choice, recursion coefficients and z(E) maps for
the multipole, inverse-square-well and Poschl-Teller problems."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from trabound.errors import (
    BranchAmbiguityError,
    DomainError,
    EmptyBasisError,
    FavardError,
)
from trabound.numerics.recursion import ThreeTermRecursion
from trabound.polynomials.coeffpoly import CoeffPolyParams, coeff_recursion, jacobi_parts
from trabound.polynomials.families import (
    BesselParams,
    JacobiParams,
    rbessel_all,
    rbessel_scaled_all,
    rjacobi_all,
    rjacobi_scaled_all,
    strict_floor,
)
from trabound.problems.models import (
    MultipoleParams,
    PoschlTellerParams,
    Potential27Params,
    potential_value,
)

BRANCH_TOL = 1e-10


@dataclass(frozen=True)
class Scenario:
    """How the basis is attached to the problem."""

    basis: str
    a: Fraction
    b: Fraction | None
    alpha: str
    beta: str
    map_id: str
    g_pattern: str


def basis_size(kind: str, **params) -> int:
    """Strict-floor basis-size rule.

    ``kind="Bessel"`` takes ``mu``; ``kind="Jacobi"`` takes ``mu`` and ``nu``.
    Raises EmptyBasisError when the rule gives N < 0.
    """
    if kind == "Bessel":
        n = strict_floor(-params["mu"] - 0.5)
    elif kind == "Jacobi":
        n = strict_floor(-(params["mu"] + params["nu"] + 1.0) / 2.0)
    else:
        raise DomainError(f"unknown basis kind {kind!r}")
    if n < 0:
        raise EmptyBasisError(f"basis-size rule gives N = {n} for {params}")
    return n


def _check_favard(rec: ThreeTermRecursion) -> ThreeTermRecursion:
    bad = rec.favard_violations()
    if bad:
        raise FavardError(bad)
    return rec


class ProblemInstance:
    """Common interface; see the three subclasses."""

    kind: str = ""
    scenario: Scenario
    energy_dependent_basis: bool = False

    def domain(self) -> tuple[float, float]:
        raise NotImplementedError

    def potential(self, x):
        return potential_value(self.params, x)

    def z_of_E(self, E: float) -> float:
        raise NotImplementedError

    def basis_size(self, E: float | None = None) -> int:
        raise NotImplementedError

    def build_recursion(self, E: float | None = None) -> tuple[ThreeTermRecursion, float]:
        raise NotImplementedError

    def psi_unnormalized(self, E: float, coeffs, x) -> np.ndarray:
        raise NotImplementedError

    def boundary_sign(self, E: float, coeffs) -> float:
        """Sign of the expansion as x approaches the lower domain end."""
        raise NotImplementedError

    def metadata(self, E: float) -> dict:
        return {}


# --- multipole --------------------------------------------------------------


class MultipoleInstance(ProblemInstance):
    """Radial problem gamma(gamma+1)/2r^2 - Z/r + Q/r^3 in the Bessel basis.

    The basis is energy dependent: lambda = 2 sqrt(-2E), mu = -2Z/lambda,
    A = 2 Q lambda and z = -(2 gamma + 1)^2 / A.
    """

    kind = "Multipole"
    energy_dependent_basis = True
    scenario = Scenario("Bessel", Fraction(-2), None, "-mu", "1/2", "B:a=-2", "y^2")

    def __init__(self, params: MultipoleParams):
        if params.Q == 0.0:
            raise DomainError("the effective quadrupole Q = eta*q must be nonzero")
        self.params = params
        self.gamma = params.gamma

    def domain(self) -> tuple[float, float]:
        return 0.0, math.inf

    def energy_map(self, E: float) -> dict:
        if not E < 0.0:
            raise DomainError(f"bound states need E < 0, got {E}")
        lam = 2.0 * math.sqrt(-2.0 * E)
        mu = -2.0 * self.params.Z / lam
        A = 2.0 * self.params.Q * lam
        z = -((2.0 * self.gamma + 1.0) ** 2) / A
        return {"lambda": lam, "mu": mu, "A": A, "z": z}

    def z_of_E(self, E: float) -> float:
        return self.energy_map(E)["z"]

    def basis_size(self, E: float | None = None) -> int:
        return basis_size("Bessel", mu=self.energy_map(E)["mu"])

    def build_recursion(self, E: float | None = None) -> tuple[ThreeTermRecursion, float]:
        m = self.energy_map(E)
        mu, A = m["mu"], m["A"]
        N = basis_size("Bessel", mu=mu)
        r, s, t = [], [], []
        for n in range(N + 1):
            r.append(-2.0 * mu / ((n + mu) * (n + mu + 1.0)) - 4.0 / A * (n + mu + 0.5) ** 2)
            if n < N:
                t.append((n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (n + mu + 0.5)))
                s.append(-(n + 1.0) / ((n + mu + 1.0) * (n + mu + 1.5)))
        return _check_favard(ThreeTermRecursion(r, s, t)), m["z"]

    def breakpoints(self, E_lo: float, E_hi: float) -> list[float]:
        """Energies in (E_lo, E_hi) where N jumps or a coefficient has a pole.

        Both happen where Z / sqrt(-2E) is a multiple of 1/2.
        """
        Z = self.params.Z
        k_lo = 1.0 / math.sqrt(-2.0 * E_lo)
        k_hi = 1.0 / math.sqrt(-2.0 * E_hi)
        j0 = math.floor(2.0 * Z * k_lo) + 1
        out = []
        j = j0
        while j / (2.0 * Z) < k_hi:
            kappa = j / (2.0 * Z)
            out.append(-1.0 / (2.0 * kappa * kappa))
            j += 1
        return out

    def psi_unnormalized(self, E: float, coeffs, x) -> np.ndarray:
        m = self.energy_map(E)
        lam, mu = m["lambda"], m["mu"]
        p = BesselParams(mu)
        F = np.asarray(coeffs, dtype=float)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        inside = x > 0.0
        y = np.full_like(x, np.nan)
        y[inside] = 1.0 / (lam * x[inside])
        big = inside & (y >= 1.0)
        small = inside & (y < 1.0)
        if np.any(big):
            yb = y[big]
            scaled = rbessel_scaled_all(p, yb)
            ly = np.log(yb)
            n = np.arange(p.N + 1)[:, None]
            expo = (mu + n) * ly[None, :] - 0.5 / yb[None, :]
            out[big] = np.sum(F[:, None] * scaled * np.exp(expo), axis=0)
        if np.any(small):
            ys = y[small]
            vals = rbessel_all(p, ys)
            series = F @ vals
            out[small] = series * np.exp(mu * np.log(ys) - 0.5 / ys)
        return out

    def boundary_sign(self, E: float, coeffs) -> float:
        # r -> 0 means y -> inf, where the degree-N term dominates
        mu = self.energy_map(E)["mu"]
        p = BesselParams(mu)
        lead = rbessel_scaled_all(p, np.array(np.inf))
        val = float(coeffs[p.N] * lead[p.N])
        return 1.0 if val >= 0.0 else -1.0

    def metadata(self, E: float) -> dict:
        m = self.energy_map(E)
        m["N"] = basis_size("Bessel", mu=m["mu"])
        m["gamma"] = self.gamma
        return m


# --- inverse-square well ----------------------------------------------------


class Potential27Instance(ProblemInstance):
    """The rho^2/((rho x)^2+2) well in the Jacobi basis with y = (rho x)^2 + 1.

    mu = sqrt(C + 1/4), nu = -sqrt(D + 1), epsilon = E / (2 rho^2) and
    z = -2A/epsilon - 1. N is fixed by (mu, nu).
    """

    kind = "Potential27"
    scenario = Scenario("Jacobi", Fraction(1, 2), Fraction(0), "(mu+1/2)/2", "-(nu+1)/2", "J:(1/2,0)", "1/(y+1)")

    def __init__(self, params: Potential27Params):
        self.params = params
        self.mu = params.mu
        self.nu = params.nu
        self.N = basis_size("Jacobi", mu=self.mu, nu=self.nu)
        self.jp = JacobiParams(self.mu, self.nu)

    def domain(self) -> tuple[float, float]:
        return 0.0, math.inf

    def _eps(self, E: float) -> float:
        if not E < 0.0:
            raise DomainError(f"bound states need E < 0, got {E}")
        return E / (2.0 * self.params.rho**2)

    def z_of_E(self, E: float) -> float:
        return -2.0 * self.params.A / self._eps(E) - 1.0

    def basis_size(self, E: float | None = None) -> int:
        return self.N

    def coefficient_parts(self) -> tuple[list[float], list[float], list[float], list[float]]:
        """E-free pieces: r_n = base_n + kin_n / epsilon, plus s_n and t_n."""
        mu, nu = self.mu, self.nu
        half = (mu + nu + 1.0) / 2.0
        base, kin, s, t = [], [], [], []
        for n in range(self.N + 1):
            diag, fwd, back = jacobi_parts(mu, nu, n, last=n == self.N)
            base.append(diag)
            kin.append((n + half) ** 2 - 1.0 / 16.0)
            if n < self.N:
                t.append(fwd)
                s.append(back)
        return base, kin, s, t

    def build_recursion(self, E: float | None = None) -> tuple[ThreeTermRecursion, float]:
        eps = self._eps(E)
        base, kin, s, t = self.coefficient_parts()
        r = [b + k / eps for b, k in zip(base, kin)]
        return _check_favard(ThreeTermRecursion(r, s, t)), self.z_of_E(E)

    def branch(self, E: float) -> dict:
        """Angle parametrisation of z on either side of E = -2 A rho^2."""
        A, rho = self.params.A, self.params.rho
        if abs(E + 2.0 * A * rho**2) <= BRANCH_TOL:
            raise BranchAmbiguityError(f"E = {E} sits on the branch point -2 A rho^2")
        eps = self._eps(E)
        z = self.z_of_E(E)
        if E < -2.0 * A * rho**2:
            theta = math.acos(max(-1.0, min(1.0, z)))
            zeta = 1.0 / (eps * math.sin(theta))
            return {"branch": "H", "theta": theta, "zeta": zeta, "tau": 0.25, "z": z}
        theta = math.acosh(z)
        zeta = 1.0 / (eps * math.sinh(theta))
        return {"branch": "Htilde", "theta": theta, "zeta": zeta, "tau": 0.25, "z": z}

    def psi_unnormalized(self, E: float, coeffs, x) -> np.ndarray:
        rho = self.params.rho
        F = np.asarray(coeffs, dtype=float)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        inside = np.isfinite(x) & (x > 0.0)
        u = (rho * x[inside]) ** 2
        y = u + 1.0
        scaled = rjacobi_scaled_all(self.jp, y)
        n = np.arange(self.N + 1)[:, None]
        expo = (
            (self.mu + 0.5) / 2.0 * np.log(u)[None, :]
            + (self.nu + 1.0) / 2.0 * np.log(u + 2.0)[None, :]
            + n * np.log(y)[None, :]
        )
        out[inside] = np.sum(F[:, None] * scaled * np.exp(expo), axis=0)
        return out

    def boundary_sign(self, E: float, coeffs) -> float:
        val = float(np.dot(coeffs, rjacobi_all(self.jp, 1.0)))
        return 1.0 if val >= 0.0 else -1.0

    def metadata(self, E: float) -> dict:
        meta = {"N": self.N, "mu": self.mu, "nu": self.nu, "epsilon": self._eps(E)}
        meta.update(self.branch(E))
        return meta


# --- Poschl-Teller ----------------------------------------------------------


class PoschlTellerInstance(ProblemInstance):
    """Trigonometric Poschl-Teller in the Jacobi basis with y = 2 tan^2(rho x) + 1.

    The recursion coefficients do not depend on E; z = -E / rho^2.
    """

    kind = "PoschlTeller"
    scenario = Scenario("Jacobi", Fraction(1, 2), Fraction(-1), "(mu+1/2)/2", "-nu/2", "J:(1/2,-1)", "(y+1)/(y-1)")

    def __init__(self, params: PoschlTellerParams):
        self.params = params
        self.mu = params.mu
        self.nu = params.nu
        self.sigma = params.sigma
        self.N = basis_size("Jacobi", mu=self.mu, nu=self.nu)
        self.jp = JacobiParams(self.mu, self.nu)

    def domain(self) -> tuple[float, float]:
        return 0.0, math.pi / (2.0 * self.params.rho)

    def z_of_E(self, E: float) -> float:
        return -E / self.params.rho**2

    def E_of_z(self, z: float) -> float:
        return -z * self.params.rho**2

    def basis_size(self, E: float | None = None) -> int:
        return self.N

    def raw_recursion(self) -> ThreeTermRecursion:
        # E-free Wilson-type recursion in the variable z = -E / rho^2
        return coeff_recursion(CoeffPolyParams("WilsonLike", self.mu, nu=self.nu, sigma=self.sigma))

    def build_recursion(self, E: float | None = None) -> tuple[ThreeTermRecursion, float]:
        rec = _check_favard(self.raw_recursion())
        z = float("nan") if E is None else self.z_of_E(E)
        return rec, z

    def psi_unnormalized(self, E: float, coeffs, x) -> np.ndarray:
        rho = self.params.rho
        F = np.asarray(coeffs, dtype=float)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        lo, hi = self.domain()
        inside = (x > lo) & (x < hi)
        th = rho * x[inside]
        sn, cs = np.sin(th), np.cos(th)
        y = 2.0 * (sn / cs) ** 2 + 1.0
        scaled = rjacobi_scaled_all(self.jp, y)
        n = np.arange(self.N + 1)[:, None]
        expo = (
            (self.mu + 0.5) * np.log(sn)[None, :]
            - (self.mu + self.nu + 0.5) * np.log(cs)[None, :]
            + n * np.log(y)[None, :]
        )
        out[inside] = np.sum(F[:, None] * scaled * np.exp(expo), axis=0)
        return out

    def boundary_sign(self, E: float, coeffs) -> float:
        val = float(np.dot(coeffs, rjacobi_all(self.jp, 1.0)))
        return 1.0 if val >= 0.0 else -1.0

    def metadata(self, E: float) -> dict:
        return {"N": self.N, "mu": self.mu, "nu": self.nu, "sigma": self.sigma}


def make_instance(params) -> ProblemInstance:
    if isinstance(params, MultipoleParams):
        return MultipoleInstance(params)
    if isinstance(params, Potential27Params):
        return Potential27Instance(params)
    if isinstance(params, PoschlTellerParams):
        return PoschlTellerInstance(params)
    raise TypeError(f"no problem instance for {type(params).__name__}")
