"""Exception types raised by the library."""


class HyptriError(ValueError):
    """Base class for all library-specific errors."""


class DomainError(HyptriError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateInputError(HyptriError):
    """Coincident circles or another input with no meaningful answer."""


class MissingIntersectionError(HyptriError):
    """A required pair of semicircles does not intersect above the axis."""

    def __init__(self, pair: str, message: str = ""):
        self.pair = pair
        super().__init__(message or f"semicircles {pair} do not intersect in the upper half-plane")


class DegenerateTriangleError(HyptriError):
    """Two of the three intersection vertices coincide."""


class NonCanonicalConfigurationError(HyptriError):
    """The configuration is outside the canonical regime the identities assume."""


class InconsistentConfigurationError(HyptriError):
    """Stored values violate a structural invariant (e.g. vertex off its circle)."""


class DivisionDegenerateError(HyptriError):
    """A center distance is zero where a quotient formula needs it."""


class NearAxisError(DomainError):
    """An arc endpoint is too close to the x-axis for the quadrature."""


class InfeasibleError(HyptriError):
    """Requested side lengths violate the triangle inequality or positivity."""


class GaugeDegenerateError(HyptriError):
    """A vertex pair shares an abscissa, so no axis-centered semicircle joins them."""


class ConvergenceError(HyptriError):
    """Iterative refinement did not reach its target residual."""

    def __init__(self, message: str, last_residual: float):
        self.last_residual = last_residual
        super().__init__(message)


class QuadratureBudgetError(HyptriError):
    """Adaptive quadrature hit its evaluation cap before reaching tolerance."""
