"""Finite orthogonal polynomial families and recursion-defined coefficient
polynomials."""

from trabound.polynomials.coeffpoly import VARIANTS, CoeffPolyParams, coeff_recursion
from trabound.polynomials.families import (
    BesselParams,
    JacobiParams,
    classical_jacobi_eval,
    laguerre_series,
    rbessel_all,
    rbessel_coefficients,
    rbessel_eval,
    rbessel_norm,
    rbessel_scaled_all,
    rbessel_series,
    rjacobi_all,
    rjacobi_coefficients,
    rjacobi_eval,
    rjacobi_norm,
    rjacobi_norm_sine,
    rjacobi_scaled_all,
    rjacobi_series,
    strict_floor,
)

__all__ = [
    "VARIANTS",
    "BesselParams",
    "CoeffPolyParams",
    "JacobiParams",
    "classical_jacobi_eval",
    "coeff_recursion",
    "laguerre_series",
    "rbessel_all",
    "rbessel_coefficients",
    "rbessel_eval",
    "rbessel_norm",
    "rbessel_scaled_all",
    "rbessel_series",
    "rjacobi_all",
    "rjacobi_coefficients",
    "rjacobi_eval",
    "rjacobi_norm",
    "rjacobi_norm_sine",
    "rjacobi_scaled_all",
    "rjacobi_series",
    "strict_floor",
]
