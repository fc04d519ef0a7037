"""Exception and warning types shared across the package."""

from __future__ import annotations


class TraError(Exception):
    """Base class for all package errors."""


class PoleError(TraError, ValueError):
    """Raised when a gamma-type function is evaluated at a pole."""


class NoSignChangeError(TraError, ValueError):
    """Raised when a root bracket does not straddle a sign change."""


class NonFiniteError(TraError, ArithmeticError):
    """Raised when a callback returns inf or nan."""


class QuadratureError(TraError, RuntimeError):
    """Adaptive quadrature hit its refinement cap.

    The best estimate reached so far is kept on ``estimate`` together with
    the accumulated error bound ``error``.
    """

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ZeroCouplerError(TraError, ZeroDivisionError):
    """A recursion coupling coefficient vanished."""


class FavardError(TraError, ValueError):
    """The coupling products s_n t_n are not all strictly positive."""

    def __init__(self, offending: list[int], message: str | None = None):
        self.offending = list(offending)
        super().__init__(message or f"s_n*t_n <= 0 at n = {self.offending}")


class DegreeError(TraError, ValueError):
    """Requested polynomial degree exceeds the family's maximum degree."""


class DomainError(TraError, ValueError):
    """Parameters or coordinates lie outside their admissible domain."""


class EmptyBasisError(DomainError):
    """The basis-size rule produced N < 0."""


class SupercriticalDipoleError(DomainError):
    """The dipole matrix has no usable positive eigenvalue."""


class TruncationError(DomainError):
    """The truncated dipole eigenvalue did not converge under refinement."""


class NoBoundStateError(TraError, RuntimeError):
    """A shooting search could not find the requested bound state."""


class NoRootsFoundError(TraError, RuntimeError):
    """A self-consistent scan found no admissible roots."""


class GridMismatchError(TraError, ValueError):
    """Two sampled wavefunctions live on different domains."""


class BranchAmbiguityError(TraError, ValueError):
    """An energy sits on the branch point of a coefficient-polynomial map."""


class UnknownRowError(TraError, KeyError):
    """A catalog identifier does not name an existing row."""


class ConfigError(TraError, ValueError):
    """A run configuration failed validation."""


class GridTooCoarseWarning(UserWarning):
    """Halving the grid step moved the result by more than the tolerance."""


class BasisSizeJumpWarning(UserWarning):
    """A root sits within tolerance of a basis-size discontinuity."""
