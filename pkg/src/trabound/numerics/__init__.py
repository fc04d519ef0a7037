"""Numerical kernel: special functions, tridiagonal eigenvalues, roots,
quadrature and the three-term recursion engine."""

from trabound.numerics.quadrature import integrate
from trabound.numerics.recursion import (
    ThreeTermRecursion,
    jacobi_matrix,
    recursion_polynomials,
    recursion_polynomials_scaled,
    terminal_value,
)
from trabound.numerics.roots import find_root_bracketed
from trabound.numerics.special import gamma_ratio, lgamma, pochhammer
from trabound.numerics.tridiag import (
    SymTridiag,
    sturm_count,
    symtridiag_eigenvalue,
    symtridiag_eigenvalues,
)

__all__ = [
    "SymTridiag",
    "ThreeTermRecursion",
    "find_root_bracketed",
    "gamma_ratio",
    "integrate",
    "jacobi_matrix",
    "lgamma",
    "pochhammer",
    "recursion_polynomials",
    "recursion_polynomials_scaled",
    "sturm_count",
    "symtridiag_eigenvalue",
    "symtridiag_eigenvalues",
    "terminal_value",
]
