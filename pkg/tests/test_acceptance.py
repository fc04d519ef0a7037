"""Acceptance criteria. Each test prints one PASS/FAIL line.

Tolerances are pinned here and are not tuned to the results.
"""

import math
import time

import numpy as np
from scipy.optimize import brentq

from oracles import charpoly_eigenvalues
from trabound.cli import main
from trabound.numerics.recursion import ThreeTermRecursion, jacobi_matrix, terminal_value
from trabound.numerics.tridiag import SymTridiag, symtridiag_eigenvalues
from trabound.polynomials.identities import run_polynomial_suite
from trabound.problems.models import (
    MultipoleParams,
    PoschlTellerParams,
    Potential27Params,
    potential_value,
    pt_exact_energy,
)
from trabound.solver.instances import MultipoleInstance, PoschlTellerInstance, Potential27Instance
from trabound.solver.numerov import NumerovGrid, numerov_bound_state
from trabound.solver.spectrum import SearchSpec, default_window, solve_spectrum, spectrum_linear
from trabound.solver.wavefunctions import exact_pt_table, node_count, overlap, wavefunction

REFERENCE_LEVELS = [
    -0.278416771, -0.148519404, -0.091908602, -0.062380108, -0.045079654,
    -0.034087447, -0.026673470, -0.021438481, -0.017605589, -0.014715516,
]
REFERENCE_TOL = 1e-6
RUNTIME_LIMIT = 10.0
PT_SWEEP = (-11.0, -13.0, -15.0, -25.0)
PT_OVERLAP_FLOOR = 0.994  # tightened from 0.99 after the first oracle run
CHARPOLY_TOL = 1e-10
RECURSION_ZERO_TOL = 1e-9
HYDROGEN_TOL = 1e-7
PT_NUMEROV_TOL = 1e-8
RESIDUAL_TOL = 1e-9
IDENTITY_DRAWS = 20


def report(capsys, n, title, ok, detail):
    with capsys.disabled():
        print(f"\nCRITERION {n} {'PASS' if ok else 'FAIL'}: {title} | {detail}")


def test_criterion_1_reference_levels(capsys, tmp_path):
    out = tmp_path / "spectrum.csv"
    t0 = time.perf_counter()
    code = main(["spectrum", "-c", "table3", "-o", str(out)])
    elapsed = time.perf_counter() - t0
    rows = [l.split(",") for l in out.read_text().splitlines() if l and not l.startswith("#")][1:]
    E = [float(r[1]) for r in rows]
    errs = [abs(a - b) for a, b in zip(E, REFERENCE_LEVELS)]
    worst = max(errs) if len(E) == 10 else math.inf
    ok = code == 0 and len(E) == 10 and worst <= REFERENCE_TOL and elapsed < RUNTIME_LIMIT
    report(
        capsys, 1, "multipole reference levels", ok,
        f"levels={len(E)} max|dE|={worst:.3e} (tol {REFERENCE_TOL:g}) runtime={elapsed:.2f}s",
    )
    assert ok


def test_criterion_2_pt_ladder(capsys):
    x = np.linspace(0.0, math.pi / 2, 8001)
    errs, gaps = [], []
    for nu in PT_SWEEP:
        inst = PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, nu))
        E3 = spectrum_linear(inst).energies[3]
        errs.append(abs(E3 - pt_exact_energy(inst.params, 3)))
        gaps.append(1.0 - abs(overlap(wavefunction(inst, E3, x, 3), exact_pt_table(inst, 3, x))))
    err_mono = all(b < a for a, b in zip(errs, errs[1:]))
    gap_mono = all(b < a for a, b in zip(gaps, gaps[1:]))
    inst = PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, -25.0))
    levels = spectrum_linear(inst).energies
    ovs = [abs(overlap(wavefunction(inst, levels[k], x, k), exact_pt_table(inst, k, x))) for k in range(4)]
    floor_ok = all(o > PT_OVERLAP_FLOOR for o in ovs)
    ok = err_mono and gap_mono and floor_ok
    report(
        capsys, 2, "Poschl-Teller convergence ladder", ok,
        "E3 errors " + ", ".join(f"{e:.3g}" for e in errs) + f" decreasing={err_mono}; "
        "1-|ov| " + ", ".join(f"{g:.3g}" for g in gaps) + f" decreasing={gap_mono}; "
        "nu=-25 |ov| k=0..3 " + ", ".join(f"{o:.5f}" for o in ovs) + f" > {PT_OVERLAP_FLOOR}={floor_ok}",
    )
    assert ok


def test_criterion_3_fig1_trend(capsys):
    p = MultipoleParams(2.0, 3.0, 5.0, 0, 0.5)
    inst = MultipoleInstance(p)
    res = solve_spectrum(inst, SearchSpec(*default_window(inst), max_levels=10))
    ovs = []
    for k in range(4):
        num = numerov_bound_state(inst.potential, inst.domain(), k, NumerovGrid(20000), tol=1e-8)
        tra = wavefunction(inst, res.energies[k], num.x, k)
        ovs.append(abs(overlap(tra, num.as_table())))
    ok = all(b > a for a, b in zip(ovs, ovs[1:]))
    report(capsys, 3, "TRA vs Numerov overlap increases with k", ok, "|ov| k=0..3 " + ", ".join(f"{o:.5f}" for o in ovs))
    assert ok


def test_criterion_4_identities(capsys):
    results = run_polynomial_suite(seed=20240607, draws=IDENTITY_DRAWS)
    bad = [r.name for r in results if not r.passed]
    ok = not bad and all(r.cases >= IDENTITY_DRAWS for r in results)
    report(capsys, 4, "polynomial identity suites", ok, f"{len(results) - len(bad)}/{len(results)} pass, draws={IDENTITY_DRAWS}" + (f" failing={bad}" if bad else ""))
    assert ok


def test_criterion_5_kernels(capsys):
    rng = np.random.default_rng(5)
    worst_eig = 0.0
    interlace = True
    for _ in range(20):
        d = rng.uniform(-3, 3, 5)
        e = rng.uniform(0.2, 2.0, 4)
        w = symtridiag_eigenvalues(SymTridiag(d, e))
        worst_eig = max(worst_eig, float(np.max(np.abs(np.array(w) - charpoly_eigenvalues(d, e)))))
        sub = symtridiag_eigenvalues(SymTridiag(d[:4], e[:3]))
        interlace &= all(w[i] <= sub[i] <= w[i + 1] for i in range(4))
    worst_zero = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 10))
        rec = ThreeTermRecursion(rng.uniform(-2, 2, n + 1), rng.uniform(0.3, 2, n), rng.uniform(0.3, 2, n))
        # each zero of F_(N+1), located by a sign change of terminal_value, is an eigenvalue
        w = symtridiag_eigenvalues(jacobi_matrix(rec))
        grid = np.linspace(w[0] - 1.0, w[-1] + 1.0, 4001)
        vals = np.array([terminal_value(rec, z) for z in grid])
        for i in np.nonzero(np.sign(vals[1:]) != np.sign(vals[:-1]))[0]:
            z = brentq(lambda u: terminal_value(rec, u), grid[i], grid[i + 1], xtol=1e-14)
            worst_zero = max(worst_zero, float(np.min(np.abs(np.array(w) - z))))
    hyd = numerov_bound_state(lambda x: -1.0 / x, (0.0, math.inf), 0, NumerovGrid(20000))
    ptp = PoschlTellerParams(1.0, 3.7, 0.5)
    pt = numerov_bound_state(lambda x: potential_value(ptp, x), (0.0, math.pi / 2), 0, NumerovGrid(4000), tol=5e-8)
    h_err = abs(hyd.E + 0.5)
    p_err = abs(pt.E - pt_exact_energy(ptp, 0))
    ok = worst_eig <= CHARPOLY_TOL and interlace and worst_zero <= RECURSION_ZERO_TOL and h_err <= HYDROGEN_TOL and p_err <= PT_NUMEROV_TOL
    report(
        capsys, 5, "kernel oracles", ok,
        f"eig vs charpoly {worst_eig:.1e}; interlacing={interlace}; F_(N+1) zeros {worst_zero:.1e}; "
        f"hydrogen dE={h_err:.1e}; PT Numerov dE={p_err:.1e}",
    )
    assert ok


def _favard_draws(rng, count=200) -> int:
    bad = 0
    for _ in range(count):
        E = -float(rng.uniform(1e-3, 8.0))
        inst = MultipoleInstance(MultipoleParams(float(rng.uniform(0.5, 3)), 3.0, float(rng.uniform(0.5, 6)), 0, 0.5, gamma_override=float(rng.uniform(0, 3))))
        try:
            rec, _ = inst.build_recursion(E)
        except Exception:
            continue
        bad += not rec.favard_ok
        inst = Potential27Instance(Potential27Params(1.0, float(rng.uniform(0.5, 4)), float(rng.uniform(0, 20)), float(rng.uniform(20, 600))))
        try:
            rec, _ = inst.build_recursion(-float(rng.uniform(0.01, 50)))
            bad += not rec.favard_ok
        except Exception:
            pass
        inst = PoschlTellerInstance(PoschlTellerParams(1.0, float(rng.uniform(0, 10)), float(rng.uniform(0, 3)), -float(rng.uniform(8, 40))))
        try:
            rec, _ = inst.build_recursion()
            bad += not rec.favard_ok
        except Exception:
            pass
    return bad


def test_criterion_6_structure(capsys):
    bad_favard = _favard_draws(np.random.default_rng(6))
    mp_inst = MultipoleInstance(MultipoleParams(2.0, 3.0, 5.0, 0, 0.5))
    pt_inst = PoschlTellerInstance(PoschlTellerParams(1.0, 3.7, 0.5, -25.0))
    p27_inst = Potential27Instance(Potential27Params(1.0, 2.0, 1.5, 399.0))
    node_fail = {}
    worst_res = 0.0
    for name, inst in (("Multipole", mp_inst), ("PoschlTeller", pt_inst), ("Potential27", p27_inst)):
        # the multipole set is the ten tabulated levels; higher ones overflow the series
        spec = SearchSpec(*default_window(inst), max_levels=10) if inst is mp_inst else None
        res = solve_spectrum(inst, spec)
        worst_res = max([worst_res] + [lv.residual for lv in res.levels])
        counts = [node_count(wavefunction(inst, lv.E, None, lv.k).psi) for lv in res.levels]
        wrong = [k for k, c in enumerate(counts) if c != k]
        if wrong:
            node_fail[name] = counts
    ok = bad_favard == 0 and not node_fail and worst_res <= RESIDUAL_TOL
    report(
        capsys, 6, "Favard, node count, residuals", ok,
        f"Favard violations={bad_favard}; max residual={worst_res:.1e}; "
        + ("node counts k-mismatch " + "; ".join(f"{n}: {c}" for n, c in node_fail.items()) if node_fail else "node counts = k"),
    )
    assert ok
