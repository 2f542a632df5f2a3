"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(ValueError):
    """A parameter set violates the constraints of a distribution or identity."""


class ConvergenceError(RuntimeError):
    """An iterative computation failed to reach the requested tolerance."""


class UnsupportedVariantError(NotImplementedError):
    """The requested operation has no closed form for this variant."""
