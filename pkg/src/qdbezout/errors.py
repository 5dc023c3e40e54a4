"""Exception types shared across the package."""


class QDError(Exception):
    """Base class for all package errors."""


class InvalidInput(QDError, ValueError):
    """Malformed scalar, polynomial or domain input."""


class DegreeOverflowError(QDError, ValueError):
    """A numerator outgrew the common denominator (pole at infinity)."""


class PoleConfigurationError(QDError, ValueError):
    """Pole divisor is not conjugate-closed or is otherwise unsupported."""


class NumericalFailure(QDError, ArithmeticError):
    """A numerical step did not produce a trustworthy answer."""


class AmbiguousRankError(NumericalFailure):
    """Eigenvalues fall inside the guard band around the rank threshold.

    ``eigenvalues`` holds the offending values, ``tentative`` the inertia
    obtained by applying the threshold anyway.
    """

    def __init__(self, message, eigenvalues=(), tentative=None):
        super().__init__(message)
        self.eigenvalues = tuple(eigenvalues)
        self.tentative = tentative


class RootFindingError(NumericalFailure):
    pass


class ExactModeUnavailable(QDError, ValueError):
    """Exact arithmetic requested for data that is not Gaussian rational."""
