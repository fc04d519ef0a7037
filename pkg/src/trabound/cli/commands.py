"""Subcommand implementations. Each returns the text it produced."""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from trabound.cli.config import RunConfig
from trabound.cli.output import provenance, to_csv, to_json, write_text
from trabound.errors import NoRootsFoundError
from trabound.polynomials.identities import CheckResult, run_polynomial_suite
from trabound.problems.catalog import (
    catalog_entries,
    derivative_check,
    export_catalog,
    mirror_check,
)
from trabound.problems.models import (
    GammaResult,
    MultipoleParams,
    PoschlTellerParams,
    Potential27Params,
    pt_exact_energy,
    solve_dipole_gamma,
)
from trabound.solver.instances import PoschlTellerInstance, ProblemInstance, make_instance
from trabound.solver.numerov import NumerovGrid, numerov_bound_state
from trabound.solver.spectrum import SearchSpec, SpectrumResult, default_window, solve_spectrum
from trabound.solver.wavefunctions import WavefunctionTable, exact_pt_table, overlap, wavefunction

SPECTRUM_SCHEMA = "trabound.spectrum/1"
WAVEFUNCTION_SCHEMA = "trabound.wavefunctions/1"
OVERLAP_SCHEMA = "trabound.overlaps/1"
REPORT_SCHEMA = "trabound.report/1"
GAMMA_SCHEMA = "trabound.gamma/1"


class LevelOutOfRange(NoRootsFoundError):
    """A requested level index is beyond the computed spectrum."""


# --- building problems ------------------------------------------------------


@dataclass
class Built:
    params: object
    instance: ProblemInstance
    gamma: GammaResult | None


def build(cfg: RunConfig, nu: float | None = None) -> Built:
    p = cfg.problem.params
    gamma = None
    if cfg.problem.kind == "Multipole":
        override = p.get("gamma")
        if override is None:
            gamma = solve_dipole_gamma(
                p["d"], p["m"], cfg.solver.gamma_size, cfg.solver.gamma_tol, cfg.solver.gamma_max_size
            )
            override = gamma.gamma
        params = MultipoleParams(p["Z"], p["d"], p["q"], p["m"], p["eta"], cfg.solver.gamma_tol, override)
    elif cfg.problem.kind == "Potential27":
        params = Potential27Params(p["rho"], p["A"], p["C"], p["D"])
    else:
        use_nu = nu if nu is not None else p.get("nu", -25.0)
        params = PoschlTellerParams(p["rho"], p["V0"], p["V1"], use_nu)
    return Built(params, make_instance(params), gamma)


def gamma_block(g: GammaResult | None) -> dict | None:
    if g is None:
        return None
    return {
        "gamma": g.gamma,
        "eigenvalue": g.eigenvalue,
        "truncation": g.size,
        "negative_eigenvalues": g.negative_count,
        "trace": [[m, v] for m, v in g.trace],
    }


def compute_spectrum(cfg: RunConfig, built: Built, min_levels: int | None = None) -> SpectrumResult:
    inst = built.instance
    if isinstance(inst, PoschlTellerInstance):
        return solve_spectrum(inst)
    s = cfg.solver
    lo, hi = (s.E_min, s.E_max) if s.E_min is not None else default_window(inst)
    max_levels = s.max_levels
    if min_levels is not None and (max_levels is None or max_levels < min_levels):
        max_levels = min_levels
    spec = SearchSpec(lo, hi, s.grid_points, s.tol, max_levels, s.max_basis)
    return solve_spectrum(inst, spec)


# --- gamma -------------------------------------------------------------------


def cmd_gamma(d: float, m: int, tol: float, size: int, max_size: int, fmt: str) -> str:
    g = solve_dipole_gamma(d, m, size, tol, max_size)
    if fmt == "json":
        return to_json(GAMMA_SCHEMA, {"d": d, "m": m, "tol": tol, **gamma_block(g)}, provenance(None))
    lines = [
        f"gamma = {g.gamma!r}",
        f"eigenvalue = {g.eigenvalue!r}",
        f"truncation = {g.size}",
        f"negative_eigenvalues = {g.negative_count}",
        "trace:",
    ]
    lines += [f"  M={M} gamma={v!r}" for M, v in g.trace]
    return "\n".join(lines) + "\n"


# --- spectrum ----------------------------------------------------------------


def cmd_spectrum(cfg: RunConfig) -> str:
    built = build(cfg)
    result = compute_spectrum(cfg, built)
    prov = provenance(cfg.to_dict(), gamma=gamma_block(built.gamma))
    exact = isinstance(built.instance, PoschlTellerInstance)
    header = ["k", "E", "z", "N", "residual"] + (["E_exact", "abs_error"] if exact else [])
    rows = []
    for lv in result.levels:
        row = [lv.k, lv.E, lv.z, lv.N, lv.residual]
        if exact:
            e = pt_exact_energy(built.params, lv.k)
            row += [e, abs(lv.E - e)]
        rows.append(row)
    if cfg.output.format == "json":
        payload = {
            "kind": result.kind,
            "mode": result.mode,
            "levels": [dict(zip(header, r)) for r in rows],
            "diagnostics": result.diagnostics,
        }
        return to_json(SPECTRUM_SCHEMA, payload, prov)
    return to_csv(header, rows, prov)


# --- wavefunction ------------------------------------------------------------


def _x_grid(cfg: RunConfig, inst: ProblemInstance, E_top: float) -> np.ndarray:
    lo, hi = inst.domain()
    x_min = lo if cfg.output.x_min is None else cfg.output.x_min
    if cfg.output.x_max is not None:
        x_max = cfg.output.x_max
    elif math.isinf(hi):
        x_max = 40.0 / math.sqrt(-2.0 * E_top)
    else:
        x_max = hi
    return np.linspace(x_min, x_max, cfg.output.grid_points)


def _check_levels(levels: tuple[int, ...], result: SpectrumResult) -> None:
    top = max(levels)
    if top >= len(result.levels):
        raise LevelOutOfRange(
            f"level k={top} requested but the spectrum has only {len(result.levels)} levels"
        )


def _fine_grid(inst: ProblemInstance, points: int = 8001) -> np.ndarray:
    lo, hi = inst.domain()
    return np.linspace(lo, hi, points)


def compute_wavefunctions(cfg: RunConfig) -> tuple[list[str], list[np.ndarray], dict]:
    """Columns (names, arrays) and the overlap summary."""
    levels = tuple(cfg.output.levels)
    sweep = cfg.solver.nu_sweep
    base = build(cfg)
    result = compute_spectrum(cfg, base, min_levels=max(levels) + 1)
    _check_levels(levels, result)
    inst = base.instance
    E_top = result.levels[max(levels)].E
    x = _x_grid(cfg, inst, E_top)
    names: list[str] = ["x"]
    cols: list[np.ndarray] = [x]
    summary: dict = {"levels": [], "gamma": gamma_block(base.gamma)}

    for k in levels:
        E = result.levels[k].E
        tra = wavefunction(inst, E, x, k)
        names.append(f"psi_{k}")
        cols.append(tra.psi)
        entry = {"k": k, "E": E, "nodes": tra.nodes, "f0": tra.f0}
        if cfg.output.oracle:
            num = numerov_bound_state(
                inst.potential, inst.domain(), k, NumerovGrid(cfg.solver.numerov_points), cfg.solver.numerov_tol
            )
            on_grid = wavefunction(inst, E, num.x, k)
            ov = overlap(on_grid, num.as_table())
            names.append(f"psi_{k}_oracle")
            cols.append(np.interp(x, num.x, num.psi, right=0.0))
            entry.update(
                {
                    "E_oracle": num.E,
                    "oracle_nodes": num.nodes,
                    "overlap_oracle": ov,
                    "abs_overlap_oracle": abs(ov),
                    "oracle_richardson_delta": num.richardson_delta,
                }
            )
        if isinstance(inst, PoschlTellerInstance):
            ex = exact_pt_table(inst, k, x)
            names.append(f"psi_{k}_exact")
            cols.append(ex.psi)
            fine = _fine_grid(inst)
            ov = overlap(wavefunction(inst, E, fine, k), exact_pt_table(inst, k, fine))
            entry.update({"E_exact": ex.E, "abs_error": abs(E - ex.E), "overlap_exact": ov})
        summary["levels"].append(entry)

    if sweep:
        ladder = []
        for nu in sweep:
            b = build(cfg, nu)
            res = compute_spectrum(cfg, b)
            _check_levels(levels, res)
            fine = _fine_grid(b.instance)
            for k in levels:
                E = res.levels[k].E
                tra = wavefunction(b.instance, E, x, k)
                names.append(f"psi_{k}_nu{nu:g}")
                cols.append(tra.psi)
                ov = overlap(wavefunction(b.instance, E, fine, k), exact_pt_table(b.instance, k, fine))
                e_exact = pt_exact_energy(b.params, k)
                ladder.append(
                    {
                        "nu": nu,
                        "N": b.instance.N,
                        "k": k,
                        "E": E,
                        "E_exact": e_exact,
                        "abs_error": abs(E - e_exact),
                        "overlap_exact": ov,
                        "one_minus_abs_overlap": 1.0 - abs(ov),
                    }
                )
        summary["ladder"] = ladder
        summary["ladder_monotone"] = {str(k): _monotone(ladder, k) for k in levels}
    return names, cols, summary


def _monotone(ladder: list[dict], k: int) -> dict:
    rows = sorted((r for r in ladder if r["k"] == k), key=lambda r: abs(r["nu"]))
    err = [r["abs_error"] for r in rows]
    gap = [r["one_minus_abs_overlap"] for r in rows]
    return {
        "energy_error_decreasing": all(b < a for a, b in zip(err, err[1:])),
        "overlap_gap_decreasing": all(b < a for a, b in zip(gap, gap[1:])),
    }


def sidecar_path(path: str | None) -> str | None:
    if path is None or path == "-":
        return None
    if path.endswith(".csv"):
        return path[: -len(".csv")] + ".overlaps.json"
    return path + ".overlaps.json"


def cmd_wavefunction(cfg: RunConfig, sidecar: str | None = None) -> tuple[str, str]:
    names, cols, summary = compute_wavefunctions(cfg)
    prov = provenance(cfg.to_dict())
    side = to_json(OVERLAP_SCHEMA, summary, prov)
    if cfg.output.format == "json":
        payload = {"columns": {n: c for n, c in zip(names, cols)}, "summary": summary}
        return to_json(WAVEFUNCTION_SCHEMA, payload, prov), side
    rows = [list(r) for r in zip(*cols)]
    return to_csv(names, rows, prov), side


# --- verify ------------------------------------------------------------------


CATALOG_DERIVATIVE_TOL = 1e-7
CATALOG_MIRROR_TOL = 1e-12


def run_catalog_checks() -> list[CheckResult]:
    entries = catalog_entries()
    worst, where = 0.0, ""
    for e in entries:
        err = derivative_check(e)
        if not err <= worst:
            worst, where = err, e.key
    out = [CheckResult("catalog_derivative", worst <= CATALOG_DERIVATIVE_TOL, worst, CATALOG_DERIVATIVE_TOL, len(entries), where)]
    mirrored = [e for e in entries if e.mirror_of is not None]
    worst, where = 0.0, ""
    for e in mirrored:
        err = mirror_check(e)
        if not err <= worst:
            worst, where = err, e.key
    out.append(CheckResult("catalog_mirror", bool(mirrored) and worst <= CATALOG_MIRROR_TOL, worst, CATALOG_MIRROR_TOL, len(mirrored), where))
    rows = json.loads(export_catalog("json"))["rows"]
    out.append(CheckResult("catalog_export", len(rows) == len(entries), float(abs(len(rows) - len(entries))), 0.0, 1, ""))
    return out


def cmd_verify(suite: str, seed: int, draws: int) -> tuple[str, str, bool]:
    results: list[CheckResult] = []
    if suite in ("polys", "all"):
        results += run_polynomial_suite(seed, draws)
    if suite in ("catalog", "all"):
        results += run_catalog_checks()
    ok = bool(results) and all(r.passed for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: max_error={r.max_error:.3e} tol={r.tolerance:.1e} cases={r.cases}"
        for r in results
    ]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    report = to_json(
        REPORT_SCHEMA,
        {"suite": suite, "seed": seed, "draws": draws, "passed": ok, "checks": [r.to_dict() for r in results]},
        provenance(None),
    )
    return "\n".join(lines) + "\n", report, ok


def cmd_catalog(fmt: str) -> str:
    return export_catalog(fmt)


def emit(path: str | None, text: str) -> None:
    write_text(path, text)


def note(msg: str) -> None:
    print(msg, file=sys.stderr)
