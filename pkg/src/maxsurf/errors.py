"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularPointError(DomainError):
    """Evaluation was requested at (or numerically on) a singular point."""


class ProximityError(DomainError):
    """A finite-difference stencil would straddle a singular point."""


class ContourError(ValueError):
    """A contour is unusable for the requested flux computation."""


class SpacelikeViolationError(ValueError):
    """A gradient field reached |grad f| >= 1 where space-likeness is required."""
