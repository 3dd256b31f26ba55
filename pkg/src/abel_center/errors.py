"""Exception hierarchy shared by all analysis modules."""


class AbelError(Exception):
    """Base class for domain errors raised by this package."""


class NonZeroMean(AbelError):
    """A trigonometric primitive was requested for an input with nonzero mean."""


class InvalidKind(AbelError):
    """Operation is not defined for this kind of system."""


class NoFactor(AbelError):
    """Polynomial has no right composition factor of the requested degree."""


class DegreeMismatch(AbelError):
    """Requested factor degree does not divide the polynomial degree."""


class ZeroPolynomial(AbelError):
    """Sign changes of the zero polynomial are undefined."""


class DomainError(AbelError, ValueError):
    """Argument outside the domain of a closed-form expression."""


class HypothesisFailed(AbelError):
    """A theorem hypothesis does not hold for the given data."""

    def __init__(self, which: str, data: dict):
        self.which = which
        self.data = data
        super().__init__(f"hypothesis failed: {which} ({data})")


class BlowUp(AbelError):
    """Numerical solution escaped the configured bound."""


class StepFailure(AbelError):
    """Adaptive integrator step size underflowed."""


class InternalCheckFailed(AbelError):
    """An identity that must hold by construction was violated (a bug trap)."""


class Mismatch(InternalCheckFailed):
    """Symbolic and numeric results disagree."""

    def __init__(self, message: str, data: dict):
        self.data = data
        super().__init__(f"{message} ({data})")
