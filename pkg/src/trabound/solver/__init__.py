"""Spectra, wavefunctions and the Numerov oracle for the worked problems."""

from trabound.solver.instances import (
    MultipoleInstance,
    PoschlTellerInstance,
    Potential27Instance,
    ProblemInstance,
    Scenario,
    basis_size,
    make_instance,
)
from trabound.solver.numerov import NumerovGrid, NumerovResult, numerov_bound_state
from trabound.solver.spectrum import (
    Level,
    SearchSpec,
    SpectrumResult,
    default_window,
    solve_spectrum,
    spectrum_linear,
    spectrum_selfconsistent,
)
from trabound.solver.wavefunctions import (
    WavefunctionTable,
    exact_pt_table,
    expansion_coefficients,
    g_factors,
    node_count,
    overlap,
    swapped_recursion,
    wavefunction,
)

__all__ = [
    "Level",
    "MultipoleInstance",
    "NumerovGrid",
    "NumerovResult",
    "PoschlTellerInstance",
    "Potential27Instance",
    "ProblemInstance",
    "Scenario",
    "SearchSpec",
    "SpectrumResult",
    "WavefunctionTable",
    "basis_size",
    "default_window",
    "exact_pt_table",
    "expansion_coefficients",
    "g_factors",
    "make_instance",
    "node_count",
    "numerov_bound_state",
    "overlap",
    "solve_spectrum",
    "spectrum_linear",
    "spectrum_selfconsistent",
    "swapped_recursion",
    "wavefunction",
]
