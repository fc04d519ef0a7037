"""Finite Romanovski-Bessel and Romanovski-Jacobi polynomials, and classical
Jacobi polynomials.

Evaluation always runs the forward three-term recursion. The ``*_scaled``
variants return P_n(y) / y^n, which stays O(1) for large arguments and lets
callers fold the power of y into a log-space prefactor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from trabound.errors import DegreeError, DomainError, EmptyBasisError, PoleError
from trabound.numerics.special import lgamma, pochhammer


def strict_floor(x: float) -> int:
    """Largest integer strictly less than ``x``.

    Differs from math.floor only at integers: strict_floor(3.0) == 2.
    """
    f = math.floor(x)
    return int(f - 1) if f == x else int(f)


@dataclass(frozen=True)
class BesselParams:
    """R-Bessel family parameter ``mu`` (negative) and derived max degree N."""

    mu: float
    N: int = field(init=False)

    def __post_init__(self) -> None:
        if not math.isfinite(self.mu):
            raise DomainError(f"mu must be finite, got {self.mu}")
        n = strict_floor(-self.mu - 0.5)
        if n < 0:
            raise EmptyBasisError(f"mu = {self.mu} leaves no admissible degree")
        object.__setattr__(self, "N", n)


@dataclass(frozen=True)
class JacobiParams:
    """R-Jacobi family parameters with mu > -1, and derived max degree N."""

    mu: float
    nu: float
    N: int = field(init=False)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mu) and math.isfinite(self.nu)):
            raise DomainError("mu and nu must be finite")
        if not self.mu > -1.0:
            raise DomainError(f"need mu > -1, got {self.mu}")
        n = strict_floor(-(self.mu + self.nu + 1.0) / 2.0)
        if n < 0:
            raise EmptyBasisError(
                f"(mu, nu) = ({self.mu}, {self.nu}) leaves no admissible degree"
            )
        object.__setattr__(self, "N", n)

    @property
    def p(self) -> float:
        return self.mu + self.nu

    @classmethod
    def arithmetic(cls, mu: float, nu: float, nmax: int) -> "JacobiParams":
        """Unvalidated parameters for purely algebraic use.

        Lets the recursion run outside the orthogonality domain, e.g. with
        mu and nu swapped for the reflection identity.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "mu", float(mu))
        object.__setattr__(obj, "nu", float(nu))
        object.__setattr__(obj, "N", int(nmax))
        return obj


def _check_degree(n: int, nmax: int) -> None:
    if not 0 <= n <= nmax:
        raise DegreeError(f"degree {n} outside 0..{nmax}")


# --- R-Bessel -------------------------------------------------------------


def rbessel_coefficients(mu: float, n: int) -> tuple[float, float, float]:
    """(a_n, b_n, c_n) with 2x Y_n = a_n Y_n - b_n Y_{n-1} + c_n Y_{n+1}."""
    a = -mu / ((n + mu) * (n + mu + 1.0))
    b = n / ((n + mu) * (2.0 * n + 2.0 * mu + 1.0))
    c = (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (2.0 * n + 2.0 * mu + 1.0))
    return a, b, c


def rbessel_all(p: BesselParams, x, nmax: int | None = None) -> np.ndarray:
    """Y_0 .. Y_nmax at ``x``; shape (nmax+1,) + shape(x)."""
    nmax = p.N if nmax is None else nmax
    _check_degree(nmax, p.N)
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + 2.0 * (p.mu + 1.0) * x
    for n in range(1, nmax):
        a, b, c = rbessel_coefficients(p.mu, n)
        out[n + 1] = ((2.0 * x - a) * out[n] + b * out[n - 1]) / c
    return out


def rbessel_eval(p: BesselParams, n: int, x):
    _check_degree(n, p.N)
    vals = rbessel_all(p, x, n)[n]
    return float(vals) if vals.ndim == 0 else vals


def rbessel_scaled_all(p: BesselParams, y, nmax: int | None = None) -> np.ndarray:
    """Y_n(y) / y^n for n = 0..nmax; requires y != 0."""
    nmax = p.N if nmax is None else nmax
    _check_degree(nmax, p.N)
    y = np.asarray(y, dtype=float)
    inv = 1.0 / y
    out = np.empty((nmax + 1,) + y.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = inv + 2.0 * (p.mu + 1.0)
    for n in range(1, nmax):
        a, b, c = rbessel_coefficients(p.mu, n)
        out[n + 1] = ((2.0 - a * inv) * out[n] + b * inv * inv * out[n - 1]) / c
    return out


def rbessel_norm(p: BesselParams, n: int) -> float:
    """Squared norm -n! Gamma(-n-2mu) / (2n+2mu+1) under x^{2mu} e^{-1/x}."""
    _check_degree(n, p.N)
    lg, sg = lgamma(-n - 2.0 * p.mu)
    denom = 2.0 * n + 2.0 * p.mu + 1.0
    return -sg * math.exp(math.lgamma(n + 1.0) + lg) / denom


# --- R-Jacobi -------------------------------------------------------------


def rjacobi_coefficients(mu: float, nu: float, n: int) -> tuple[float, float, float]:
    """(b_n, c_n, d_n) with y J_n = b_n J_n + c_n J_{n-1} + d_n J_{n+1}."""
    p = mu + nu
    k = 2.0 * n + p
    if n == 0:
        b = (nu - mu) / (p + 2.0)  # cancels the p factor in (nu^2-mu^2)/(p(p+2))
        c = 0.0
    else:
        b = (nu * nu - mu * mu) / (k * (k + 2.0))
        c = 2.0 * (n + mu) * (n + nu) / (k * (k + 1.0))
    d = 2.0 * (n + 1.0) * (n + p + 1.0) / ((k + 1.0) * (k + 2.0))
    return b, c, d


def rjacobi_all(p: JacobiParams, y, nmax: int | None = None) -> np.ndarray:
    """J_0 .. J_nmax at ``y``; shape (nmax+1,) + shape(y)."""
    nmax = p.N if nmax is None else nmax
    _check_degree(nmax, p.N)
    y = np.asarray(y, dtype=float)
    out = np.empty((nmax + 1,) + y.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = (p.mu + 1.0) - (p.p + 2.0) * (1.0 - y) / 2.0
    for n in range(1, nmax):
        b, c, d = rjacobi_coefficients(p.mu, p.nu, n)
        out[n + 1] = ((y - b) * out[n] - c * out[n - 1]) / d
    return out


def rjacobi_eval(p: JacobiParams, n: int, y):
    _check_degree(n, p.N)
    vals = rjacobi_all(p, y, n)[n]
    return float(vals) if vals.ndim == 0 else vals


def rjacobi_scaled_all(p: JacobiParams, y, nmax: int | None = None) -> np.ndarray:
    """J_n(y) / y^n for n = 0..nmax; requires y != 0."""
    nmax = p.N if nmax is None else nmax
    _check_degree(nmax, p.N)
    y = np.asarray(y, dtype=float)
    inv = 1.0 / y
    out = np.empty((nmax + 1,) + y.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = (p.mu + 1.0 - (p.p + 2.0) / 2.0) * inv + (p.p + 2.0) / 2.0
    for n in range(1, nmax):
        b, c, d = rjacobi_coefficients(p.mu, p.nu, n)
        out[n + 1] = ((1.0 - b * inv) * out[n] - c * inv * inv * out[n - 1]) / d
    return out


def rjacobi_norm(p: JacobiParams, n: int) -> float:
    """Squared norm under (y-1)^mu (y+1)^nu on [1, inf).

    Uses the Gamma(-n-mu-nu) form with Gamma(n+nu+1)/Gamma(nu+1) written as
    the Pochhammer symbol (nu+1)_n, so integer nu is handled.
    """
    _check_degree(n, p.N)
    mu, nu, pp = p.mu, p.nu, p.p
    l1, s1 = lgamma(n + mu + 1.0)
    l2, s2 = lgamma(-n - pp)
    l3, s3 = lgamma(-nu)
    poch = pochhammer(nu + 1.0, n)
    if poch == 0.0:
        return 0.0
    log_mag = (
        (pp + 1.0) * math.log(2.0) + l1 + l2 - l3 - math.lgamma(n + 1.0)
        + math.log(abs(poch)) - math.log(abs(2.0 * n + pp + 1.0))
    )
    sign = (-1) ** (n + 1) * s1 * s2 * s3
    sign *= 1 if poch > 0 else -1
    sign *= 1 if 2.0 * n + pp + 1.0 > 0 else -1
    return sign * math.exp(log_mag)


def _gamma_times_sine(x: float, shift: float) -> tuple[float, int]:
    """log|Gamma(x) sin(pi shift)| and its sign, where x - shift is an integer.

    At a pole of Gamma(x) the sine vanishes; the finite limit comes from the
    reflection formula Gamma(x) Gamma(1-x) = pi / sin(pi x).
    """
    m = round(x - shift)
    if x <= 0.0 and x == math.floor(x):
        # Gamma(x) sin(pi shift) -> pi (-1)^m / Gamma(1-x) as shift -> integer
        lg, sg = lgamma(1.0 - x)
        return math.log(math.pi) - lg, sg * (-1 if m % 2 else 1)
    lg, sg = lgamma(x)
    sn = math.sin(math.pi * shift)
    if sn == 0.0:
        return -math.inf, 1
    return lg + math.log(abs(sn)), sg * (1 if sn > 0 else -1)


def rjacobi_norm_sine(p: JacobiParams, n: int) -> float:
    """The same squared norm through the sin(pi nu)/sin(pi(mu+nu+1)) form.

    Where nu or mu+nu is an integer the Gamma poles and sine zeros cancel;
    each Gamma-times-sine pair is then taken at its limiting value.
    """
    _check_degree(n, p.N)
    mu, nu, pp = p.mu, p.nu, p.p
    l1, s1 = lgamma(n + mu + 1.0)
    lnum, snum = _gamma_times_sine(n + nu + 1.0, nu)
    lden, sden = _gamma_times_sine(n + pp + 1.0, pp + 1.0)
    if math.isinf(lden):
        raise PoleError("mu + nu makes the sine form singular")
    if math.isinf(lnum):
        return 0.0
    log_mag = (pp + 1.0) * math.log(2.0) + l1 + lnum - lden - math.lgamma(n + 1.0)
    sign = s1 * snum * sden * (1 if 2.0 * n + pp + 1.0 > 0 else -1)
    return sign * math.exp(log_mag) / abs(2.0 * n + pp + 1.0)


# --- classical Jacobi -----------------------------------------------------


def classical_jacobi_eval(alpha: float, beta: float, k: int, u):
    """P_k^{(alpha, beta)}(u) via the standard three-term recurrence."""
    if k < 0:
        raise DegreeError("k must be >= 0")
    u = np.asarray(u, dtype=float)
    p_prev = np.ones_like(u)
    if k == 0:
        return float(p_prev) if u.ndim == 0 else p_prev
    ab = alpha + beta
    p_cur = (alpha + 1.0) + (ab + 2.0) * (u - 1.0) / 2.0
    for n in range(2, k + 1):
        c = 2.0 * n + ab
        a1 = 2.0 * n * (n + ab) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c
        p_prev, p_cur = p_cur, ((a2 + a3 * u) * p_cur - a4 * p_prev) / a1
    return float(p_cur) if u.ndim == 0 else p_cur


# --- terminating hypergeometric series (independent evaluation paths) -----


def rbessel_series(mu: float, n: int, x: float) -> float:
    """Y_n^mu(x) from its terminating 2F0 series."""
    total = 0.0
    term = 1.0
    for k in range(n + 1):
        total += term
        term *= (-n + k) * (n + 2.0 * mu + 1.0 + k) * (-x) / (k + 1.0)
    return total


def rjacobi_series(mu: float, nu: float, n: int, y: float) -> float:
    """J_n^{(mu,nu)}(y) from its terminating 2F1 series."""
    w = (1.0 - y) / 2.0
    p = mu + nu
    total = 0.0
    term = 1.0
    for k in range(n + 1):
        total += term
        term *= (-n + k) * (n + p + 1.0 + k) * w / ((mu + 1.0 + k) * (k + 1.0))
    return pochhammer(mu + 1.0, n) / math.factorial(n) * total


def laguerre_series(n: int, alpha: float, t: float) -> float:
    """Generalized Laguerre L_n^alpha(t) from its finite series."""
    total = 0.0
    for k in range(n + 1):
        coef = pochhammer(alpha + k + 1.0, n - k) / math.factorial(n - k)
        total += coef * (-t) ** k / math.factorial(k)
    return total
