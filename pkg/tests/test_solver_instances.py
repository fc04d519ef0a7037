import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import multipole_matrix, pt_matrix
from trabound.errors import BranchAmbiguityError, DomainError, EmptyBasisError, FavardError, PoleError
from trabound.numerics.recursion import jacobi_matrix
from trabound.polynomials.coeffpoly import jacobi_parts
from trabound.problems.models import MultipoleParams, PoschlTellerParams, Potential27Params
from trabound.solver.instances import (
    BRANCH_TOL,
    MultipoleInstance,
    PoschlTellerInstance,
    Potential27Instance,
    basis_size,
    make_instance,
)
from trabound.solver.spectrum import solve_spectrum
from trabound.solver.wavefunctions import expansion_coefficients


def test_basis_size_rule():
    assert basis_size("Bessel", mu=-3.2) == 2
    assert basis_size("Jacobi", mu=math.sqrt(7.65), nu=-25.0) == 10
    with pytest.raises(EmptyBasisError):
        basis_size("Bessel", mu=-0.4)
    with pytest.raises(DomainError):
        basis_size("Laguerre", mu=1.0)


def test_potential27_first_couplers_for_one_minus_nine():
    # hand substitution at n = 0 with mu + nu = -8
    diag, t0, s0 = jacobi_parts(1.0, -9.0, 0)
    assert t0 == pytest.approx(-1.0 / 3.0, rel=1e-15)
    assert s0 == pytest.approx(2 * 2 * (-8) / ((-6) * (-5)), rel=1e-15)
    assert diag == pytest.approx(-10.0 / -6.0, rel=1e-15)


def test_potential27_diagonal_pole_is_reported():
    # (mu, nu) = (1, -9) puts k (k + 2) = 0 on the last row
    inst = Potential27Instance(Potential27Params(1.0, 2.0, 0.75, 80.0))
    with pytest.raises(PoleError):
        inst.build_recursion(-3.0)


def test_multipole_first_diagonal(multipole):
    E = -0.2
    m = multipole.energy_map(E)
    mu, A = m["mu"], m["A"]
    rec, z = multipole.build_recursion(E)
    r0 = -2.0 * mu / (mu * (mu + 1.0)) - 4.0 / A * (mu + 0.5) ** 2
    assert rec.r[0] == pytest.approx(r0, rel=1e-14)
    assert z == pytest.approx(-((2 * multipole.gamma + 1) ** 2) / A, rel=1e-14)


@given(st.floats(-7.9, -1e-3))
def test_multipole_matrix_matches_oracle(E):
    inst = MultipoleInstance(MultipoleParams(2.0, 3.0, 5.0, 0, 0.5, gamma_override=1.1844265439779909))
    try:
        rec, z = inst.build_recursion(E)
    except (EmptyBasisError, PoleError, ZeroDivisionError):
        return
    if rec.size > 40:
        return
    mat, z_ref = multipole_matrix(E, 2.0, 2.5, 1.1844265439779909)
    assert z == pytest.approx(z_ref, rel=1e-13)
    ours = jacobi_matrix(rec)
    scale = np.abs(mat).max()
    np.testing.assert_allclose(ours.d, np.diag(mat), atol=1e-11 * scale)
    np.testing.assert_allclose(np.abs(ours.e), np.abs(np.diag(mat, 1)), atol=1e-11 * scale)


def test_pt_matrix_matches_oracle(pt25):
    rec, _ = pt25.build_recursion()
    mat = pt_matrix(pt25.mu, pt25.nu, pt25.sigma)
    ours = jacobi_matrix(rec)
    np.testing.assert_allclose(ours.d, np.diag(mat), rtol=1e-13)
    np.testing.assert_allclose(ours.e, np.diag(mat, 1), rtol=1e-13)


def test_pt_recursion_is_energy_free(pt25):
    a, _ = pt25.build_recursion(3.0)
    b, _ = pt25.build_recursion(50.0)
    assert a == b


@given(st.floats(-8.0, -1e-4))
def test_multipole_favard_holds(E):
    inst = MultipoleInstance(MultipoleParams(2.0, 3.0, 5.0, 0, 0.5, gamma_override=1.18))
    try:
        rec, _ = inst.build_recursion(E)
    except (EmptyBasisError, PoleError, ZeroDivisionError):
        return
    assert rec.favard_ok


@given(st.floats(0.0, 30.0), st.floats(20.0, 800.0), st.floats(-50.0, -0.01))
def test_potential27_favard_holds(C, D, E):
    try:
        inst = Potential27Instance(Potential27Params(1.0, 2.0, C, D))
        rec, _ = inst.build_recursion(E)
    except (EmptyBasisError, PoleError):
        return
    assert rec.favard_ok


@given(st.floats(0.0, 10.0), st.floats(0.0, 10.0), st.floats(-70.0, -8.0))
def test_pt_favard_iff_sigma_window(V0, V1, nu):
    p = PoschlTellerParams(1.0, V0, V1, nu)
    inst = PoschlTellerInstance(p)
    pp = p.mu + nu
    if abs(pp - round(pp)) < 1e-9:
        return
    # the sigma factors ((k+1)^2 - sigma^2)((k+3)^2 - sigma^2) must stay positive
    window = all(
        ((2 * n + pp + 1) ** 2 - p.sigma**2) * ((2 * n + pp + 3) ** 2 - p.sigma**2) > 0.0
        for n in range(inst.N)
    )
    if window:
        assert inst.build_recursion()[0].favard_ok
    else:
        with pytest.raises(FavardError):
            inst.build_recursion()


def test_pt_favard_violation_at_nu_minus_sixty():
    inst = PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, -60.0))
    with pytest.raises(FavardError):
        inst.build_recursion()


def test_branch_ambiguity():
    inst = Potential27Instance(Potential27Params(1.0, 2.0, 1.5, 399.0))
    with pytest.raises(BranchAmbiguityError):
        inst.branch(-4.0)
    with pytest.raises(BranchAmbiguityError):
        inst.branch(-4.0 + 0.5 * BRANCH_TOL)
    assert inst.branch(-10.0)["branch"] == "H"
    assert inst.branch(-1.0)["branch"] == "Htilde"
    for E in (-10.0, -1.0):
        b = inst.branch(E)
        arg = math.cos(b["theta"]) if b["branch"] == "H" else math.cosh(b["theta"])
        assert arg == pytest.approx(inst.z_of_E(E), rel=1e-12)


def test_multipole_rejects_zero_quadrupole():
    with pytest.raises(DomainError):
        MultipoleInstance(MultipoleParams(2.0, 3.0, 0.0, 0, 0.5))
    with pytest.raises(DomainError):
        MultipoleInstance(MultipoleParams(2.0, 3.0, 5.0, 0, 0.5)).energy_map(0.1)


def test_make_instance_dispatch():
    assert isinstance(make_instance(PoschlTellerParams(1.0, 3.7, 0.5)), PoschlTellerInstance)
    assert isinstance(make_instance(Potential27Params(1.0, 2.0, 1.5, 399.0)), Potential27Instance)
    with pytest.raises(TypeError):
        make_instance(object())


def test_multipole_breakpoints(multipole):
    bps = multipole.breakpoints(-8.0, -0.01)
    kappas = [1.0 / math.sqrt(-2.0 * E) for E in bps]
    assert all(abs(4.0 * k - round(4.0 * k)) < 1e-12 for k in kappas)
    assert bps == sorted(bps)


# --- residual collapse: (H - E) psi_TRA is proportional to the first
# --- discarded polynomial, which proves the coefficients are exact


def _pt_ratios(inst, k, xs):
    E = solve_spectrum(inst).energies[k]
    coeffs = expansion_coefficients(inst, E)
    rho, mu, nu = inst.params.rho, inst.mu, inst.nu
    N = inst.N
    with mp.workdps(40):
        def y_of(x):
            return 2 * mp.tan(rho * x) ** 2 + 1

        def pref(x):
            return mp.sin(rho * x) ** (mu + 0.5) * mp.cos(rho * x) ** (-mu - nu - 0.5)

        def psi(x):
            return pref(x) * sum(mp.mpf(float(c)) * mp.jacobi(n, mu, nu, y_of(x)) for n, c in enumerate(coeffs))

        out = []
        for x in xs:
            x = mp.mpf(x)
            hpsi = -mp.diff(psi, x, 2) / 2 + (inst.params.V0 / mp.sin(rho * x) ** 2 + inst.params.V1 / mp.cos(rho * x) ** 2 - E) * psi(x)
            out.append(float(hpsi / (pref(x) * mp.jacobi(N + 1, mu, nu, y_of(x)))))
    return out


@pytest.mark.parametrize("k", [0, 3])
def test_pt_residual_collapses(k):
    inst = PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, -13.0))
    ratios = _pt_ratios(inst, k, [0.2, 0.5, 0.8, 1.1])
    assert max(ratios) - min(ratios) <= 1e-8 * max(abs(r) for r in ratios)


def test_potential27_residual_collapses():
    p = Potential27Params(1.0, 2.0, 1.5, 99.0)
    inst = Potential27Instance(p)
    E = solve_spectrum(inst).energies[1]
    coeffs = expansion_coefficients(inst, E)
    mu, nu, N = inst.mu, inst.nu, inst.N
    with mp.workdps(40):
        def pref(x):
            u = x * x
            return u ** ((mu + 0.5) / 2) * (u + 2) ** ((nu + 1) / 2)

        def psi(x):
            y = x * x + 1
            return pref(x) * sum(mp.mpf(float(c)) * mp.jacobi(n, mu, nu, y) for n, c in enumerate(coeffs))

        ratios = []
        for x in (0.3, 0.9, 1.7, 3.1):
            x = mp.mpf(x)
            u = x * x
            V = 1 / (u + 2) * (p.C / u - p.D / (u + 2) - 4 * p.A)
            hpsi = -mp.diff(psi, x, 2) / 2 + (V - E) * psi(x)
            y = u + 1
            ratios.append(float(hpsi * (y + 1) / (pref(x) * mp.jacobi(N + 1, mu, nu, y))))
    assert max(ratios) - min(ratios) <= 1e-8 * max(abs(r) for r in ratios)
