"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class PreconditionError(ValueError):
    """Inputs are well-formed but insufficient for the requested evaluation."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured size cap."""


class NonConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance."""
