"""Bound states of radial and one-dimensional Schroedinger problems from
finite tridiagonal bases of Romanovski-Bessel and Romanovski-Jacobi type."""

from trabound._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
