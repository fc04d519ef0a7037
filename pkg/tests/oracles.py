"""Independent reference computations used by the tests.

Nothing here calls into the package's solvers: matrices are rebuilt from
the closed-form coefficients with numpy/scipy, special functions come from
mpmath, and roots are found with scipy's brentq.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np
from scipy import linalg, optimize


# --- tridiagonal eigenvalues via the characteristic polynomial --------------


def charpoly_values(d, e, x: float) -> list[float]:
    """p_0 .. p_n of the leading principal minors of (T - x I)."""
    p = [1.0, d[0] - x]
    for i in range(1, len(d)):
        p.append((d[i] - x) * p[-1] - e[i - 1] ** 2 * p[-2])
    return p


def charpoly_eigenvalues(d, e, samples: int = 20001) -> list[float]:
    """Roots of det(T - x I) by dense sign scanning plus bisection."""
    d = np.asarray(d, float)
    e = np.asarray(e, float)
    r = np.abs(d).max() + 2.0 * (np.abs(e).max() if e.size else 0.0) + 1.0
    xs = np.linspace(-r, r, samples)
    f = lambda x: charpoly_values(d, e, x)[-1]
    vals = [f(x) for x in xs]
    roots = []
    for a, b, fa, fb in zip(xs[:-1], xs[1:], vals[:-1], vals[1:]):
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0.0:
            roots.append(optimize.brentq(f, a, b, xtol=1e-15, rtol=1e-15))
    return sorted(roots)


def scipy_tridiag_eigenvalues(d, e) -> np.ndarray:
    return linalg.eigh_tridiagonal(np.asarray(d, float), np.asarray(e, float), eigvals_only=True)


# --- dipole separation constant ----------------------------------------------


def dense_dipole_gamma(d: float, m: int, size: int = 256) -> float:
    i = np.arange(size)
    diag = (i + m + 0.5) ** 2
    j = np.arange(1, size)
    off = -d * np.sqrt(j * (j + 2.0 * m) / ((j + m) ** 2 - 0.25))
    mat = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    w = np.linalg.eigvalsh(mat)
    lam = w[w > 0.0][0]
    return math.sqrt(lam) - 0.5


# --- multipole TRA levels from the characteristic determinant ----------------


def multipole_matrix(E: float, Z: float, Q: float, gamma: float):
    lam = 2.0 * math.sqrt(-2.0 * E)
    mu = -2.0 * Z / lam
    A = 2.0 * Q * lam
    z = -((2.0 * gamma + 1.0) ** 2) / A
    N = math.ceil(-mu - 0.5) - 1
    if N < 0:
        return None, z
    n = np.arange(N + 1, dtype=float)
    r = -2.0 * mu / ((n + mu) * (n + mu + 1.0)) - 4.0 / A * (n + mu + 0.5) ** 2
    m = np.arange(N, dtype=float)
    t = (m + 2.0 * mu + 1.0) / ((m + mu + 1.0) * (m + mu + 0.5))
    s = -(m + 1.0) / ((m + mu + 1.0) * (m + mu + 1.5))
    mat = np.diag(r) + np.diag(np.sqrt(s * t), 1) + np.diag(np.sqrt(s * t), -1)
    return mat, z


def multipole_levels(Z: float, Q: float, gamma: float, count: int, per_segment: int = 400) -> list[float]:
    """Lowest TRA levels from the normalized determinant of z - T(E).

    det(z I - T) / prod(z - d_n) keeps the sign information while the poles of
    the coefficients are removed segment by segment in kappa = 1/sqrt(-2E).
    """
    found: list[float] = []
    j = 2  # Z kappa = j/2; below j = 2 the basis is empty
    while len(found) < count and j < 400:
        k_lo, k_hi = j / (2.0 * Z), (j + 1) / (2.0 * Z)
        ks = np.linspace(k_lo, k_hi, per_segment + 2)[1:-1]

        def char(kappa: float) -> float:
            E = -0.5 / kappa**2
            mat, z = multipole_matrix(E, Z, Q, gamma)
            w = np.linalg.eigvalsh(mat)
            return float(np.prod(np.tanh(z - w)))

        vals = [char(k) for k in ks]
        for a, b, fa, fb in zip(ks[:-1], ks[1:], vals[:-1], vals[1:]):
            if fa * fb < 0.0:
                kr = optimize.brentq(char, a, b, xtol=1e-15, rtol=1e-15)
                found.append(-0.5 / kr**2)
        j += 1
    return sorted(found)[:count]


# --- Poschl-Teller TRA matrix ------------------------------------------------


def pt_matrix(mu: float, nu: float, sigma: float) -> np.ndarray:
    N = math.ceil(-(mu + nu + 1.0) / 2.0) - 1
    p = mu + nu
    n = np.arange(N + 1, dtype=float)
    k = 2.0 * n + p
    ratio = (nu * nu - mu * mu) / (k * (k + 2.0))
    half = (p + 1.0) / 2.0
    r = (ratio + 1.0) * ((n + half) ** 2 - sigma**2 / 4.0) - nu * nu / 2.0
    m = np.arange(N, dtype=float)
    km = 2.0 * m + p
    t = (m + 1) * (m + p + 1) * (km + sigma + 1) * (km - sigma + 1) / (2 * (km + 1) * (km + 2))
    s = (m + 1 + mu) * (m + 1 + nu) * (km + sigma + 3) * (km - sigma + 3) / (2 * (km + 2) * (km + 3))
    off = np.sqrt(s * t)
    return np.diag(r) + np.diag(off, 1) + np.diag(off, -1)


def pt_tra_energies(rho: float, V0: float, V1: float, nu: float) -> np.ndarray:
    mu = math.sqrt(0.25 + 2.0 * V0 / rho**2)
    sigma = math.sqrt(0.25 + 2.0 * V1 / rho**2)
    z = np.linalg.eigvalsh(pt_matrix(mu, nu, sigma))
    return np.sort(-z * rho**2)


def pt_exact(rho: float, V0: float, V1: float, k: int) -> float:
    mu = math.sqrt(0.25 + 2.0 * V0 / rho**2)
    sigma = math.sqrt(0.25 + 2.0 * V1 / rho**2)
    return 2.0 * rho**2 * (k + (mu + sigma + 1.0) / 2.0) ** 2


# --- potential-27 levels from a generalized symmetric pencil -----------------


def p27_levels(rho: float, A: float, C: float, D: float) -> np.ndarray:
    """With u = 1/epsilon both r_n and z are linear in u, so the self-consistent
    condition is the pencil (R0 + I + offdiag) v = -u (K + 2A I) v."""
    mu = math.sqrt(C + 0.25)
    nu = -math.sqrt(D + 1.0)
    p = mu + nu
    N = math.ceil(-(p + 1.0) / 2.0) - 1
    n = np.arange(N + 1, dtype=float)
    k = 2.0 * n + p
    base = (nu * nu - mu * mu) / (k * (k + 2.0))
    kin = (n + (p + 1.0) / 2.0) ** 2 - 1.0 / 16.0
    m = np.arange(N, dtype=float)
    km = 2.0 * m + p
    t = 2 * (m + 1) * (m + p + 1) / ((km + 1) * (km + 2))
    s = 2 * (m + 1 + mu) * (m + 1 + nu) / ((km + 2) * (km + 3))
    off = np.sqrt(s * t)
    lhs = np.diag(base + 1.0) + np.diag(off, 1) + np.diag(off, -1)
    rhs = np.diag(kin + 2.0 * A)
    w = linalg.eigh(lhs, rhs, eigvals_only=True)
    u = -w
    eps = 1.0 / u
    return np.sort(2.0 * rho**2 * eps[eps < 0.0])


# --- special functions -------------------------------------------------------


def mp_lgamma(x: float) -> tuple[float, int]:
    g = mp.gamma(mp.mpf(x))
    return float(mp.log(abs(g))), (1 if g > 0 else -1)


def mp_pochhammer(a: float, n: int) -> float:
    return float(mp.rf(mp.mpf(a), n))


def mp_rjacobi(mu: float, nu: float, n: int, y: float) -> float:
    """J_n is the classical Jacobi polynomial P_n^(mu, nu) continued to y >= 1."""
    with mp.workdps(50):
        return float(mp.jacobi(n, mu, nu, mp.mpf(y)))


def mp_rbessel(mu: float, n: int, x: float) -> float:
    """Y_n(x) = 2F0(-n, n + 2 mu + 1; ; -x) in 50-digit arithmetic."""
    with mp.workdps(50):
        return float(mp.hyp2f0(-n, n + 2 * mu + 1, -mp.mpf(x)))
