"""Coefficient polynomials defined only through a three-term recursion.

Four variants:

* ``B``          R-Bessel-type, parameters (mu, gamma)
* ``H``          R-Jacobi-type with trigonometric angle, (mu, nu, zeta, gamma, theta)
* ``Htilde``     the hyperbolic continuation of ``H``, same parameters
* ``WilsonLike`` discrete Wilson-type recursion, (mu, nu, sigma)

For ``H`` and ``Htilde`` the left-hand side of the recursion carries cos(theta)
(resp. cosh(theta)). The returned recursion is in that variable, with the
zeta*sin(theta) (resp. zeta*sinh(theta)) term folded into the diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from trabound.errors import DegreeError, DomainError, PoleError
from trabound.numerics.recursion import ThreeTermRecursion
from trabound.polynomials.families import BesselParams, JacobiParams

VARIANTS = ("B", "H", "Htilde", "WilsonLike")


@dataclass(frozen=True)
class CoeffPolyParams:
    variant: str
    mu: float
    nu: float | None = None
    gamma: float | None = None
    zeta: float | None = None
    theta: float | None = None
    sigma: float | None = None
    degree: int | None = None  # defaults to the family's max degree

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}; expected {VARIANTS}")
        need = {
            "B": ("gamma",),
            "H": ("nu", "zeta", "gamma", "theta"),
            "Htilde": ("nu", "zeta", "gamma", "theta"),
            "WilsonLike": ("nu", "sigma"),
        }[self.variant]
        missing = [name for name in need if getattr(self, name) is None]
        if missing:
            raise DomainError(f"variant {self.variant} needs {missing}")
        if self.variant == "H" and not 0.0 < self.theta < math.pi:
            raise DomainError(f"H needs 0 < theta < pi, got {self.theta}")
        if self.variant == "Htilde" and not self.theta > 0.0:
            raise DomainError(f"Htilde needs theta > 0, got {self.theta}")
        if self.variant == "WilsonLike" and not self.sigma >= 0.0:
            raise DomainError(f"WilsonLike needs sigma >= 0, got {self.sigma}")
        nmax = self.max_degree
        if self.degree is not None and not 0 <= self.degree <= nmax:
            raise DegreeError(f"degree {self.degree} outside 0..{nmax}")

    @property
    def max_degree(self) -> int:
        if self.variant == "B":
            return BesselParams(self.mu).N
        return JacobiParams(self.mu, self.nu).N

    @property
    def size(self) -> int:
        return (self.max_degree if self.degree is None else self.degree) + 1

    def argument(self) -> float:
        """Natural evaluation point: cos(theta) for H, cosh(theta) for Htilde."""
        if self.variant == "H":
            return math.cos(self.theta)
        if self.variant == "Htilde":
            return math.cosh(self.theta)
        raise DomainError(f"variant {self.variant} has no built-in argument")


def jacobi_parts(mu: float, nu: float, n: int, last: bool = False) -> tuple[float, float, float]:
    """Diagonal ratio, forward and backward couplers shared by H and H-tilde.

    Forward: coefficient of P_{n+1} at row n. Backward: coefficient of P_n at
    row n+1.
    """
    p = mu + nu
    k = 2.0 * n + p
    if n > 0 and k * (k + 2.0) == 0.0:
        raise PoleError(f"diagonal pole at n = {n} for mu + nu = {p}")
    diag = (nu - mu) / (p + 2.0) if n == 0 else (nu * nu - mu * mu) / (k * (k + 2.0))
    if not last:
        fwd = 2.0 * (n + 1.0) * (n + p + 1.0) / ((k + 1.0) * (k + 2.0))
        back = 2.0 * (n + 1.0 + mu) * (n + 1.0 + nu) / ((k + 2.0) * (k + 3.0))
    else:
        fwd = back = 0.0
    return diag, fwd, back


def coeff_recursion(p: CoeffPolyParams) -> ThreeTermRecursion:
    """Recursion {r_n, s_n, t_n} generating the variant's polynomials."""
    size = p.size
    r: list[float] = []
    s: list[float] = []
    t: list[float] = []
    mu = p.mu
    if p.variant == "B":
        g = p.gamma
        if mu == math.floor(mu):
            raise PoleError(f"B recursion has a pole at integer mu = {mu}")
        for n in range(size):
            r.append(-2.0 * mu / ((n + mu) * (n + mu + 1.0)) + g * (n + mu + 0.5) ** 2)
            if n < size - 1:
                s.append((n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (n + mu + 0.5)))
                t.append(-(n + 1.0) / ((n + mu + 1.0) * (n + mu + 1.5)))
        return ThreeTermRecursion(r, s, t)

    nu = p.nu
    half = (mu + nu + 1.0) / 2.0
    if p.variant in ("H", "Htilde"):
        trig = math.sin(p.theta) if p.variant == "H" else math.sinh(p.theta)
        zs = p.zeta * trig
        for n in range(size):
            diag, fwd, back = jacobi_parts(mu, nu, n, last=n == size - 1)
            r.append(((n + half) ** 2 - p.gamma**2) * zs + diag)
            if n < size - 1:
                s.append(fwd)
                t.append(back)
        return ThreeTermRecursion(r, s, t)

    # WilsonLike
    sig = p.sigma
    pp = mu + nu
    for n in range(size):
        k = 2.0 * n + pp
        if n > 0 and k * (k + 2.0) == 0.0:
            raise PoleError(f"diagonal pole at n = {n} for mu + nu = {pp}")
        ratio = (nu - mu) / (pp + 2.0) if n == 0 else (nu * nu - mu * mu) / (k * (k + 2.0))
        r.append((ratio + 1.0) * ((n + half) ** 2 - sig * sig / 4.0) - nu * nu / 2.0)
        if n < size - 1:
            t.append(
                (n + 1.0) * (n + pp + 1.0) * (k + sig + 1.0) * (k - sig + 1.0)
                / (2.0 * (k + 1.0) * (k + 2.0))
            )
            s.append(
                (n + 1.0 + mu) * (n + 1.0 + nu) * (k + sig + 3.0) * (k - sig + 3.0)
                / (2.0 * (k + 2.0) * (k + 3.0))
            )
    return ThreeTermRecursion(r, s, t)
