"""Exception types shared across the package."""


class RangeError(ValueError):
    """An index, order or size parameter is outside the supported range."""


class DomainError(ValueError):
    """A point lies outside the reference domain of a map."""


class ConformalityError(ValueError):
    """The density Sigma = |f'|^2 is non-positive or the map is not univalent."""


class UnsupportedMapError(ValueError):
    """The map does not have the form an engine requires (e.g. not polynomial)."""


class DefinitenessError(ValueError):
    """A matrix that must be positive definite is not (Cholesky failed)."""


class ConvergenceError(RuntimeError):
    """An iteration failed to converge.  Carries the last estimate."""

    def __init__(self, message, last_estimate=None, iterations=None):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.iterations = iterations


class AccuracyError(RuntimeError):
    """A quadrature or series did not reach the requested tolerance."""

    def __init__(self, message, estimate=None, achieved=None):
        super().__init__(message)
        self.estimate = estimate
        self.achieved = achieved


class DegeneracyError(RuntimeError):
    """A level is (or became) degenerate where a simple level was expected,
    or an invariant-subspace iteration lost rank."""


class ShiftError(RuntimeError):
    """The shift of an inverse iteration coincides with an eigenvalue."""
