"""Potential catalog, worked problem parameters and exact references."""

from trabound.problems.catalog import (
    CATALOG,
    CatalogEntry,
    CoordinateMap,
    catalog_entries,
    catalog_lookup,
    derivative_check,
    export_catalog,
    find_entry,
    mirror_check,
)
from trabound.problems.models import (
    GammaResult,
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

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "CoordinateMap",
    "GammaResult",
    "MultipoleParams",
    "PoschlTellerParams",
    "Potential27Params",
    "catalog_entries",
    "catalog_lookup",
    "derivative_check",
    "dipole_matrix",
    "domain",
    "export_catalog",
    "find_entry",
    "gamma_from_dipole",
    "mirror_check",
    "potential_value",
    "pt_exact_energy",
    "pt_exact_wavefunction",
    "solve_dipole_gamma",
]
