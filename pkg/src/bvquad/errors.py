"""Exception types raised by the public API."""


class BvquadError(Exception):
    """Base class for all bvquad errors."""


class UnsupportedWeightError(BvquadError):
    """Weight kind is unknown or not admissible for the requested operation."""


class UnsupportedLambdaError(UnsupportedWeightError):
    """Ultraspherical parameter outside [0, 1] union {3} for a Kronrod extension."""


class DomainError(BvquadError):
    """Scalar argument outside its admissible range."""


class SizeError(BvquadError):
    """Node count below the minimum for the requested family."""


class EigenFailureError(BvquadError):
    """Symmetric tridiagonal eigensolver did not converge."""


class IllConditionedError(BvquadError):
    """Interpolatory weight solve failed its post-hoc exactness check."""


class ExtensionFailureError(BvquadError):
    """Kronrod extension produced a complex, out-of-range, or invalid node."""


class WeightMismatchError(BvquadError):
    """Rule targets a different weight than the operation requires."""


class PreconditionError(BvquadError):
    """Operation precondition violated (e.g. rule not exact on P_s)."""


class BoundViolationError(BvquadError):
    """An error-bound inequality failed; carries the numbers involved."""

    def __init__(self, message, actual_error=None, kernel_bound=None, freud_bound=None):
        super().__init__(message)
        self.actual_error = actual_error
        self.kernel_bound = kernel_bound
        self.freud_bound = freud_bound


class ScalingViolationError(BvquadError):
    """Compound-rule kernel scaling identity failed at some subdivision count."""

    def __init__(self, message, n=None, ratio=None):
        super().__init__(message)
        self.n = n
        self.ratio = ratio


class InsufficientDataError(BvquadError):
    """Too few usable samples for a slope fit."""
