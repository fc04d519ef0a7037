"""Identity suites for the polynomial families.

Each check draws random valid parameters, evaluates both sides of an
identity and records the worst discrepancy. Polynomial identities are
compared coefficient by coefficient using numpy Polynomial objects built
from the terminating hypergeometric series, so they are independent of the
recursion used for evaluation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from trabound.numerics.quadrature import integrate
from trabound.numerics.recursion import recursion_polynomials
from trabound.numerics.special import pochhammer
from trabound.polynomials.coeffpoly import CoeffPolyParams, coeff_recursion
from trabound.polynomials.families import (
    BesselParams,
    JacobiParams,
    laguerre_series,
    rbessel_all,
    rbessel_coefficients,
    rbessel_norm,
    rbessel_series,
    rjacobi_all,
    rjacobi_coefficients,
    rjacobi_norm,
    rjacobi_norm_sine,
    rjacobi_series,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    cases: int
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "cases": self.cases,
            "detail": self.detail,
        }


class _Tracker:
    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.worst = 0.0
        self.cases = 0
        self.where = ""

    def add(self, err: float, where: str) -> None:
        self.cases += 1
        if not err <= self.worst:  # also catches nan
            self.worst = err
            self.where = where

    def result(self) -> CheckResult:
        ok = self.cases > 0 and self.worst <= self.tol
        return CheckResult(self.name, ok, self.worst, self.tol, self.cases, self.where)


# --- exact coefficient arrays --------------------------------------------


def bessel_poly(mu: float, n: int) -> Polynomial:
    """Y_n^mu as a Polynomial in x, from the 2F0 series."""
    coef = [1.0]
    term = 1.0
    for k in range(n):
        term *= (-n + k) * (n + 2.0 * mu + 1.0 + k) * (-1.0) / (k + 1.0)
        coef.append(term)
    return Polynomial(coef)


def jacobi_poly(mu: float, nu: float, n: int) -> Polynomial:
    """J_n^{(mu,nu)} as a Polynomial in y, from the 2F1 series."""
    w = Polynomial([0.5, -0.5])
    p = mu + nu
    total = Polynomial([0.0])
    term = 1.0
    for k in range(n + 1):
        total = total + term * w**k
        term *= (-n + k) * (n + p + 1.0 + k) / ((mu + 1.0 + k) * (k + 1.0))
    return total * (pochhammer(mu + 1.0, n) / math.factorial(n))


def _rel_resid(resid: Polynomial, *parts: Polynomial) -> float:
    scale = max([1e-300] + [float(np.max(np.abs(q.coef))) for q in parts])
    return float(np.max(np.abs(resid.coef))) / scale


def _x_poly() -> Polynomial:
    return Polynomial([0.0, 1.0])


def _draw_bessel_mu(rng: np.random.Generator, lo: float = -12.5, hi: float = -5.6) -> float:
    return float(rng.uniform(lo, hi))


def _draw_jacobi(rng: np.random.Generator) -> tuple[float, float]:
    return float(rng.uniform(-0.9, 4.0)), float(rng.uniform(-40.0, -18.0))


# --- R-Bessel suites -------------------------------------------------------


def check_bessel_recursion_vs_series(rng, draws: int = 20, nmax: int = 5) -> CheckResult:
    tr = _Tracker("bessel recursion vs 2F0 series", 1e-11)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        p = BesselParams(mu)
        for x in rng.uniform(0.0, 3.0, size=3):
            vals = rbessel_all(p, x, nmax)
            for n in range(nmax + 1):
                ref = rbessel_series(mu, n, float(x))
                scale = sum(abs(c) * x**k for k, c in enumerate(bessel_poly(mu, n).coef))
                tr.add(abs(vals[n] - ref) / max(scale, 1e-300), f"mu={mu:.6g} n={n} x={x:.4g}")
    return tr.result()


def check_bessel_orthogonality(rng, draws: int = 20, nmax: int = 6) -> CheckResult:
    tr = _Tracker("bessel orthogonality vs quadrature", 1e-7)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng, -14.0, -8.0)
        p = BesselParams(mu)
        top = min(p.N, nmax)

        def integrand(x: float, n: int, m: int) -> float:
            if x <= 0.0:
                return 0.0
            ys = _bessel_scalar(mu, top, x)
            return math.exp(2.0 * mu * math.log(x) - 1.0 / x) * ys[n] * ys[m]

        norms = [rbessel_norm(p, n) for n in range(top + 1)]
        for n in range(top + 1):
            for m in range(n, top + 1):
                scale = math.sqrt(norms[n] * norms[m])
                # integrate the scaled integrand so the tolerance is relative
                val = integrate(lambda x: integrand(x, n, m) / scale, 0.0, math.inf, 1e-12)
                target = norms[n] / scale if n == m else 0.0
                tr.add(abs(val - target), f"mu={mu:.6g} n={n} m={m}")
    return tr.result()


def check_bessel_ode(rng, draws: int = 20, nmax: int = 5) -> CheckResult:
    tr = _Tracker("bessel differential equation", 1e-10)
    x = _x_poly()
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        for n in range(nmax + 1):
            y = bessel_poly(mu, n)
            a = x**2 * y.deriv(2)
            b = (1.0 + 2.0 * (mu + 1.0) * x) * y.deriv(1)
            c = n * (n + 2.0 * mu + 1.0) * y
            tr.add(_rel_resid(a + b - c, a, b, c), f"mu={mu:.6g} n={n}")
    return tr.result()


def check_bessel_forward_shift(rng, draws: int = 20, nmax: int = 4) -> CheckResult:
    tr = _Tracker("bessel forward shift", 1e-10)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        for n in range(1, nmax + 1):
            lhs = bessel_poly(mu, n).deriv(1)
            rhs = n * (n + 2.0 * mu + 1.0) * bessel_poly(mu + 1.0, n - 1)
            tr.add(_rel_resid(lhs - rhs, lhs, rhs), f"mu={mu:.6g} n={n}")
    return tr.result()


def check_bessel_backward_shift(rng, draws: int = 20, nmax: int = 4) -> CheckResult:
    """x^2 Y_n' = -(2 mu x + 1) Y_n + Y_{n+1}^{mu-1}."""
    tr = _Tracker("bessel backward shift", 1e-10)
    x = _x_poly()
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        for n in range(nmax + 1):
            y = bessel_poly(mu, n)
            lhs = x**2 * y.deriv(1)
            a = -(2.0 * mu * x + 1.0) * y
            b = bessel_poly(mu - 1.0, n + 1)
            tr.add(_rel_resid(lhs - a - b, lhs, a, b), f"mu={mu:.6g} n={n}")
    return tr.result()


def check_bessel_lowered_expansion(rng, draws: int = 20, nmax: int = 4) -> CheckResult:
    """2 Y_{n+1}^{mu-1} as a combination of Y_{n-1}, Y_n, Y_{n+1} at mu."""
    tr = _Tracker("bessel lowered-parameter expansion", 1e-10)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        for n in range(nmax + 1):
            lhs = 2.0 * bessel_poly(mu - 1.0, n + 1)
            k = 2.0 * n + 2.0 * mu + 1.0
            a = (n + 1.0) * (n + 2.0 * mu) / ((n + mu) * (n + mu + 1.0)) * bessel_poly(mu, n)
            b = Polynomial([0.0])
            if n > 0:
                b = n * (n + 1.0) / ((n + mu) * k) * bessel_poly(mu, n - 1)
            c = (n + 2.0 * mu) * (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * k) * bessel_poly(mu, n + 1)
            tr.add(_rel_resid(lhs - a - b - c, lhs, a, b, c), f"mu={mu:.6g} n={n}")
    return tr.result()


def check_bessel_backward_three_term(rng, draws: int = 20, nmax: int = 4) -> CheckResult:
    """2 x^2 Y_n' as a combination of Y_{n-1}, Y_n, Y_{n+1}."""
    tr = _Tracker("bessel backward shift, three-term form", 1e-10)
    x = _x_poly()
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        for n in range(nmax + 1):
            lhs = 2.0 * x**2 * bessel_poly(mu, n).deriv(1)
            k = 2.0 * n + 2.0 * mu + 1.0
            f = n * (n + 2.0 * mu + 1.0)
            a = -f / ((n + mu) * (n + mu + 1.0)) * bessel_poly(mu, n)
            b = Polynomial([0.0])
            if n > 0:
                b = f / ((n + mu) * k) * bessel_poly(mu, n - 1)
            c = f / ((n + mu + 1.0) * k) * bessel_poly(mu, n + 1)
            tr.add(_rel_resid(lhs - a - b - c, lhs, a, b, c), f"mu={mu:.6g} n={n}")
    return tr.result()


def bessel_generating_closed(mu: float, x: float, t: float) -> float:
    root = math.sqrt(1.0 - 4.0 * x * t)
    return (
        2.0 ** (2.0 * mu) / root * (1.0 + root) ** (-2.0 * mu)
        * math.exp(2.0 * t / (1.0 + root))
    )


def check_bessel_generating_function(rng, draws: int = 20, t: float = 1e-3) -> CheckResult:
    tr = _Tracker("bessel generating function (partial sum)", 1e-12)
    cases = [(-12.0, x) for x in (0.1, 0.5, 1.0)]
    cases += [(_draw_bessel_mu(rng, -14.0, -8.0), float(rng.uniform(0.05, 1.0))) for _ in range(draws)]
    for mu, x in cases:
        p = BesselParams(mu)
        ys = rbessel_all(p, x)
        partial = math.fsum(ys[n] * t**n / math.factorial(n) for n in range(p.N + 1))
        tr.add(abs(partial - bessel_generating_closed(mu, x, t)), f"mu={mu:.6g} x={x:.4g}")
    return tr.result()


def check_bessel_laguerre(rng, draws: int = 20, nmax: int = 3) -> CheckResult:
    tr = _Tracker("bessel-laguerre connection", 1e-10)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        p = BesselParams(mu)
        for x in rng.uniform(0.05, 3.0, size=3):
            x = float(x)
            ys = rbessel_all(p, x, nmax)
            for n in range(nmax + 1):
                ref = math.factorial(n) * (-x) ** n * laguerre_series(n, -(2.0 * n + 2.0 * mu + 1.0), 1.0 / x)
                tr.add(abs(ys[n] - ref) / max(1.0, abs(ref)), f"mu={mu:.6g} n={n} x={x:.4g}")
    return tr.result()


def check_bessel_definiteness(rng, draws: int = 20) -> CheckResult:
    """Neighbour couplings of the recursion share a sign for every n < N."""
    tr = _Tracker("bessel recursion definiteness", 0.0)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng, -20.0, -0.6)
        p = BesselParams(mu)
        for n in range(p.N):
            _, _, c_n = rbessel_coefficients(mu, n)
            _, b_next, _ = rbessel_coefficients(mu, n + 1)
            # coefficient of Y_{n+1} in row n is c_n, of Y_n in row n+1 is -b_{n+1}
            bad = 0.0 if c_n * (-b_next) > 0.0 else 1.0
            if n >= 1:
                _, b_n, _ = rbessel_coefficients(mu, n)
                bad = max(bad, 0.0 if c_n * (-b_n) > 0.0 else 1.0)
            tr.add(bad, f"mu={mu:.6g} n={n}")
    return tr.result()


def check_b_recursion(rng, draws: int = 20) -> CheckResult:
    """The B-variant recursion against a literal transcription, n <= 3."""
    tr = _Tracker("B polynomial recursion", 1e-12)
    for _ in range(draws):
        mu = _draw_bessel_mu(rng)
        g = float(rng.uniform(-3.0, 3.0))
        z = float(rng.uniform(-5.0, 5.0))
        vals = recursion_polynomials(coeff_recursion(CoeffPolyParams("B", mu, gamma=g, degree=3)), z)
        b = [1.0]
        prev = 0.0
        for n in range(3):
            diag = -2.0 * mu / ((n + mu) * (n + mu + 1.0)) + g * (n + mu + 0.5) ** 2
            down = -n / ((n + mu) * (n + mu + 0.5))
            up = (n + 2.0 * mu + 1.0) / ((n + mu + 1.0) * (n + mu + 0.5))
            nxt = ((z - diag) * b[n] - down * prev) / up
            prev = b[n]
            b.append(nxt)
        for n in range(4):
            tr.add(abs(vals[n] - b[n]) / max(1.0, abs(b[n])), f"mu={mu:.6g} g={g:.4g} n={n}")
    return tr.result()


# --- R-Jacobi suites -------------------------------------------------------


def check_jacobi_reflection(rng, draws: int = 20, nmax: int = 5) -> CheckResult:
    tr = _Tracker("jacobi reflection symmetry", 1e-10)
    for _ in range(draws):
        mu, nu = _draw_jacobi(rng)
        for n in range(nmax + 1):
            lhs = jacobi_poly(mu, nu, n)
            swapped = jacobi_poly(nu, mu, n)
            rhs = Polynomial(swapped.coef * (-1.0) ** np.arange(n + 1)) * (-1.0) ** n
            tr.add(_rel_resid(lhs - rhs, lhs, rhs), f"mu={mu:.6g} nu={nu:.6g} n={n}")
        # the recursion-based evaluator agrees too
        p = JacobiParams(mu, nu)
        q = JacobiParams.arithmetic(nu, mu, nmax)
        for y in rng.uniform(1.0, 4.0, size=2):
            a = rjacobi_all(p, y, nmax)
            b = rjacobi_all(q, -y, nmax)
            for n in range(nmax + 1):
                tr.add(abs(a[n] - (-1) ** n * b[n]) / max(1.0, abs(a[n])), f"eval n={n} y={y:.4g}")
    return tr.result()


def check_jacobi_ode(rng, draws: int = 20, nmax: int = 5) -> CheckResult:
    tr = _Tracker("jacobi differential equation", 1e-10)
    y = _x_poly()
    for _ in range(draws):
        mu, nu = _draw_jacobi(rng)
        for n in range(nmax + 1):
            j = jacobi_poly(mu, nu, n)
            a = (y**2 - 1.0) * j.deriv(2)
            b = ((mu + nu + 2.0) * y + mu - nu) * j.deriv(1)
            c = n * (n + mu + nu + 1.0) * j
            tr.add(_rel_resid(a + b - c, a, b, c), f"mu={mu:.6g} nu={nu:.6g} n={n}")
    return tr.result()


def check_jacobi_recursion_vs_series(rng, draws: int = 20, nmax: int = 5) -> CheckResult:
    tr = _Tracker("jacobi recursion vs 2F1 series", 1e-11)
    for _ in range(draws):
        mu, nu = _draw_jacobi(rng)
        p = JacobiParams(mu, nu)
        for yv in rng.uniform(1.0, 4.0, size=3):
            vals = rjacobi_all(p, yv, nmax)
            for n in range(nmax + 1):
                ref = rjacobi_series(mu, nu, n, float(yv))
                scale = sum(abs(c) * abs(yv) ** k for k, c in enumerate(jacobi_poly(mu, nu, n).coef))
                tr.add(abs(vals[n] - ref) / max(scale, 1e-300), f"mu={mu:.6g} nu={nu:.6g} n={n}")
    return tr.result()


def check_jacobi_differential_relation(rng, draws: int = 20, nmax: int = 4) -> CheckResult:
    tr = _Tracker("jacobi differential relation", 1e-10)
    y = _x_poly()
    for _ in range(draws):
        mu, nu = _draw_jacobi(rng)
        p = mu + nu
        for n in range(nmax + 1):
            lhs = (y**2 - 1.0) * jacobi_poly(mu, nu, n).deriv(1)
            k = 2.0 * n + p
            f = 2.0 * (n + p + 1.0)
            a = f * (nu - mu) * n / (k * (k + 2.0)) * jacobi_poly(mu, nu, n)
            b = Polynomial([0.0])
            if n > 0:
                b = -f * (n + mu) * (n + nu) / (k * (k + 1.0)) * jacobi_poly(mu, nu, n - 1)
            c = f * n * (n + 1.0) / ((k + 1.0) * (k + 2.0)) * jacobi_poly(mu, nu, n + 1)
            tr.add(_rel_resid(lhs - a - b - c, lhs, a, b, c), f"mu={mu:.6g} nu={nu:.6g} n={n}")
    return tr.result()


def check_jacobi_norm_forms(rng, draws: int = 20) -> CheckResult:
    tr = _Tracker("jacobi norm: sine form vs gamma form", 1e-10)
    cases = [(0.5, -10.0)] + [_draw_jacobi(rng) for _ in range(draws)]
    cases += [(float(rng.uniform(-0.9, 4.0)), float(-rng.integers(18, 40))) for _ in range(5)]
    for mu, nu in cases:
        p = JacobiParams(mu, nu)
        for n in range(p.N + 1):
            a = rjacobi_norm(p, n)
            b = rjacobi_norm_sine(p, n)
            err = abs(a - b) / abs(a) if a > 0.0 else math.inf
            tr.add(err, f"mu={mu:.6g} nu={nu:.6g} n={n}")
    return tr.result()


def _bessel_scalar(mu: float, top: int, x: float) -> list[float]:
    out = [1.0, 1.0 + 2.0 * (mu + 1.0) * x]
    for n in range(1, top):
        a, b, c = rbessel_coefficients(mu, n)
        out.append(((2.0 * x - a) * out[n] + b * out[n - 1]) / c)
    return out[: top + 1]


def _jacobi_scalar(mu: float, nu: float, top: int, y: float) -> list[float]:
    out = [1.0, (mu + 1.0) - (mu + nu + 2.0) * (1.0 - y) / 2.0]
    for n in range(1, top):
        b, c, d = rjacobi_coefficients(mu, nu, n)
        out.append(((y - b) * out[n] - c * out[n - 1]) / d)
    return out[: top + 1]


def _jacobi_weighted_integral(mu: float, nu: float, degree: int, f, tol: float = 1e-12) -> float:
    """int_1^inf (y-1)^mu (y+1)^nu f(y) dy for a polynomial f of ``degree``.

    On [1, 2] the substitution y = 1 + v^{1/(mu+1)} absorbs the endpoint
    power. On [2, inf) the substitution y = 2 w^{-1/s}, with s the algebraic
    decay rate of the integrand, leaves a bounded integrand on (0, 1].
    """
    q = 1.0 / (mu + 1.0)
    s = -(mu + nu + degree + 1.0)

    def near(v: float) -> float:
        if v <= 0.0:
            return 0.0
        y = 1.0 + v**q
        return (y + 1.0) ** nu * f(y)

    def far(w: float) -> float:
        if w < 1e-30:
            return 0.0
        y = 2.0 * w ** (-1.0 / s)
        jac = (2.0 / s) * w ** (-1.0 / s - 1.0)
        return (y - 1.0) ** mu * (y + 1.0) ** nu * f(y) * jac

    return q * integrate(near, 0.0, 1.0, tol) + integrate(far, 0.0, 1.0, tol)


def check_jacobi_orthogonality(rng, draws: int = 20, nmax: int = 6) -> CheckResult:
    tr = _Tracker("jacobi orthogonality vs quadrature", 1e-7)
    cases = [(0.5, -10.0)] + [_draw_jacobi(rng) for _ in range(draws)]
    for mu, nu in cases:
        p = JacobiParams(mu, nu)
        top = min(p.N, nmax)
        norms = [rjacobi_norm(p, n) for n in range(top + 1)]
        for n in range(top + 1):
            for m in range(n, top + 1):
                scale = math.sqrt(norms[n] * norms[m])

                def f(y: float, n=n, m=m) -> float:
                    js = _jacobi_scalar(mu, nu, top, y)
                    return js[n] * js[m] / scale

                val = _jacobi_weighted_integral(mu, nu, n + m, f)
                target = norms[n] / scale if n == m else 0.0
                tr.add(abs(val - target), f"mu={mu:.6g} nu={nu:.6g} n={n} m={m}")
    return tr.result()


def _h_complex(mu: float, nu: float, zeta: complex, gamma: float, theta: complex, nmax: int) -> list[complex]:
    """H_n by the trigonometric recursion with complex zeta and theta."""
    p = mu + nu
    half = (p + 1.0) / 2.0
    z = cmath.cos(theta)
    zs = zeta * cmath.sin(theta)
    out = [1.0 + 0j]
    prev = 0j
    for n in range(nmax):
        k = 2.0 * n + p
        diag = (nu - mu) / (p + 2.0) if n == 0 else (nu * nu - mu * mu) / (k * (k + 2.0))
        diag = diag + ((n + half) ** 2 - gamma**2) * zs
        down = 0.0 if n == 0 else 2.0 * (n + mu) * (n + nu) / (k * (k + 1.0))
        up = 2.0 * (n + 1.0) * (n + p + 1.0) / ((k + 1.0) * (k + 2.0))
        nxt = ((z - diag) * out[n] - down * prev) / up
        prev = out[n]
        out.append(nxt)
    return out


def check_h_polynomials(rng, draws: int = 20) -> CheckResult:
    """H at zeta=0 is the R-Jacobi recursion; H-tilde is H at (-i zeta, i theta)."""
    tr = _Tracker("H and H-tilde recursions", 1e-10)
    for _ in range(draws):
        mu, nu = _draw_jacobi(rng)
        nmax = JacobiParams(mu, nu).N
        g = float(rng.uniform(0.0, 1.0))
        # zeta = 0 reduces to the plain recursion in cos(theta)
        theta = float(rng.uniform(0.1, 3.0))
        h0 = recursion_polynomials(
            coeff_recursion(CoeffPolyParams("H", mu, nu, gamma=g, zeta=0.0, theta=theta)),
            math.cos(theta),
        )
        jv = rjacobi_all(JacobiParams(mu, nu), math.cos(theta))
        for n in range(nmax + 1):
            tr.add(abs(h0[n] - jv[n]) / max(1.0, abs(jv[n])), f"zeta=0 mu={mu:.6g} n={n}")
        # the literal trigonometric recursion
        zeta = float(rng.uniform(-2.0, 2.0))
        hp = CoeffPolyParams("H", mu, nu, gamma=g, zeta=zeta, theta=theta)
        hv = recursion_polynomials(coeff_recursion(hp), hp.argument())
        hc = _h_complex(mu, nu, zeta, g, theta, nmax)
        for n in range(nmax + 1):
            tr.add(abs(hv[n] - hc[n]) / max(1.0, abs(hc[n])), f"H mu={mu:.6g} n={n}")
        # hyperbolic continuation
        th = float(rng.uniform(0.1, 2.0))
        tp = CoeffPolyParams("Htilde", mu, nu, gamma=g, zeta=zeta, theta=th)
        tv = recursion_polynomials(coeff_recursion(tp), tp.argument())
        tc = _h_complex(mu, nu, -1j * zeta, g, 1j * th, nmax)
        for n in range(nmax + 1):
            err = abs(tv[n] - tc[n]) / max(1.0, abs(tc[n]))
            tr.add(err, f"Htilde mu={mu:.6g} n={n}")
    return tr.result()


BESSEL_SUITE = (
    check_bessel_recursion_vs_series,
    check_bessel_orthogonality,
    check_bessel_ode,
    check_bessel_forward_shift,
    check_bessel_backward_shift,
    check_bessel_lowered_expansion,
    check_bessel_backward_three_term,
    check_bessel_generating_function,
    check_bessel_laguerre,
    check_bessel_definiteness,
    check_b_recursion,
)

JACOBI_SUITE = (
    check_jacobi_reflection,
    check_jacobi_ode,
    check_jacobi_recursion_vs_series,
    check_jacobi_differential_relation,
    check_jacobi_norm_forms,
    check_jacobi_orthogonality,
    check_h_polynomials,
)


def run_polynomial_suite(seed: int = 20240607, draws: int = 20) -> list[CheckResult]:
    """Run every polynomial identity check with a seeded generator."""
    rng = np.random.default_rng(seed)
    return [check(rng, draws) for check in BESSEL_SUITE + JACOBI_SUITE]
