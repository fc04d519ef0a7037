import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import dense_dipole_gamma, pt_exact
from trabound.errors import DomainError, SupercriticalDipoleError, TruncationError
from trabound.problems.models import (
    MultipoleParams,
    PoschlTellerParams,
    Potential27Params,
    dipole_matrix,
    domain,
    gamma_from_dipole,
    potential_value,
    pt_exact_energy,
    pt_exact_wavefunction,
    solve_dipole_gamma,
)
from trabound.solver.wavefunctions import node_count

GAMMA_D3_M0 = 1.1844265439779909  # frozen from the dense numpy oracle


def test_gamma_frozen_value():
    res = solve_dipole_gamma(3.0, 0)
    assert res.gamma == pytest.approx(GAMMA_D3_M0, abs=1e-12)
    assert res.eigenvalue == pytest.approx((GAMMA_D3_M0 + 0.5) ** 2, rel=1e-14)
    assert res.negative_count == 1  # one bound angular state lies below zero
    assert res.trace[-1] == (res.size, res.gamma)


@pytest.mark.parametrize("d, m", [(0.5, 0), (3.0, 0), (2.0, 1), (6.0, 2), (1.5, 3)])
def test_gamma_matches_dense_oracle(d, m):
    assert gamma_from_dipole(d, m) == pytest.approx(dense_dipole_gamma(d, m), abs=1e-10)


@pytest.mark.parametrize("m", [0, 1, 4])
def test_gamma_without_dipole_is_angular_momentum(m):
    assert gamma_from_dipole(0.0, m) == pytest.approx(m, abs=1e-13)


def test_supercritical_dipole():
    with pytest.raises(SupercriticalDipoleError):
        solve_dipole_gamma(1e6, 0)


def test_truncation_error():
    with pytest.raises(TruncationError):
        solve_dipole_gamma(0.5, 0, size=2, tol=1e-15, max_size=4)


def test_dipole_matrix_entries():
    mat = dipole_matrix(3.0, 0, 3)
    assert mat.d == (0.25, 2.25, 6.25)
    assert mat.e[0] == pytest.approx(-3.0 * math.sqrt(1.0 / 0.75), rel=1e-15)
    assert mat.e[1] == pytest.approx(-3.0 * math.sqrt(4.0 / 3.75), rel=1e-15)


def test_gamma_override():
    p = MultipoleParams(2.0, 3.0, 5.0, 0, 0.5, gamma_override=0.75)
    assert p.gamma == 0.75 and p.gamma_result is None
    assert p.Q == 2.5


@pytest.mark.parametrize(
    "kwargs",
    [dict(Z=0.0), dict(eta=1.5), dict(m=-1), dict(m=0.5)],
)
def test_multipole_validation(kwargs):
    base = dict(Z=2.0, d=3.0, q=5.0, m=0, eta=0.5)
    base.update(kwargs)
    with pytest.raises(DomainError):
        MultipoleParams(**base)


def test_potential_values():
    p = MultipoleParams(2.0, 0.0, 5.0, 1, 0.5)
    x = 1.7
    assert potential_value(p, x) == pytest.approx(1.0 / x**2 - 2.0 / x + 2.5 / x**3, rel=1e-12)
    pt = PoschlTellerParams(1.0, 3.7, 0.5)
    assert potential_value(pt, 0.4) == pytest.approx(3.7 / math.sin(0.4) ** 2 + 0.5 / math.cos(0.4) ** 2)
    with pytest.raises(DomainError):
        potential_value(pt, math.pi / 2)
    with pytest.raises(DomainError):
        potential_value(p, 0.0)
    assert domain(pt) == (0.0, math.pi / 2)


def test_potential27_has_one_local_minimum():
    p = Potential27Params(1.0, 2.0, 1.5, 399.0)
    x = np.geomspace(1e-3, 50.0, 20001)
    v = potential_value(p, x)
    interior_minima = np.sum((v[1:-1] < v[:-2]) & (v[1:-1] < v[2:]))
    assert interior_minima == 1
    assert p.mu == pytest.approx(math.sqrt(1.75))
    assert p.nu == pytest.approx(-20.0)
    assert p.N == 8


@pytest.mark.parametrize("kwargs", [dict(rho=0.0), dict(C=-0.3), dict(D=-1.0), dict(A=-1.0)])
def test_potential27_validation(kwargs):
    base = dict(rho=1.0, A=2.0, C=1.5, D=399.0)
    base.update(kwargs)
    with pytest.raises(DomainError):
        Potential27Params(**base)


def test_pt_parameters():
    p = PoschlTellerParams(1.0, 3.7, 0.5, -25.0)
    assert p.mu == pytest.approx(math.sqrt(7.65))
    assert p.sigma == pytest.approx(math.sqrt(1.25))
    assert p.N == strict_n(p.mu, -25.0)
    with pytest.raises(DomainError):
        PoschlTellerParams(1.0, 3.7, 0.5, -2.0)
    with pytest.raises(DomainError):
        PoschlTellerParams(1.0, -1.0, 0.5)


def strict_n(mu, nu):
    v = -(mu + nu + 1.0) / 2.0
    return math.ceil(v) - 1


@given(st.floats(0.3, 3.0), st.floats(0.0, 10.0), st.floats(0.0, 10.0), st.integers(0, 6))
def test_pt_exact_energy_matches_closed_form(rho, V0, V1, k):
    p = PoschlTellerParams(rho, V0, V1, -60.0)
    assert pt_exact_energy(p, k) == pytest.approx(pt_exact(rho, V0, V1, k), rel=1e-14)


@pytest.mark.parametrize("k", range(5))
def test_pt_exact_wavefunction_nodes(k):
    p = PoschlTellerParams(1.0, 3.7, 0.5)
    x = np.linspace(1e-4, math.pi / 2 - 1e-4, 4001)
    assert node_count(pt_exact_wavefunction(p, k, x)) == k


def test_pt_exact_wavefunction_solves_equation():
    p = PoschlTellerParams(1.3, 2.0, 0.7)
    h = 1e-4
    for k in range(3):
        E = pt_exact_energy(p, k)
        for x in (0.3, 0.6, 0.9):
            f = lambda t: pt_exact_wavefunction(p, k, t)
            d2 = (f(x + h) - 2 * f(x) + f(x - h)) / h**2
            resid = -0.5 * d2 + (potential_value(p, x) - E) * f(x)
            assert abs(resid) < 1e-5 * (1 + E * abs(f(x)))
