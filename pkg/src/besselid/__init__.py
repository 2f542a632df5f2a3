"""Modified-Bessel probability distributions and their infinite-divisibility
properties: special-function primitives, quadrature engines, a catalog of
Stieltjes-transform identities, and numerical complete-monotonicity tests."""

from .errors import (ConvergenceError, DomainError, ParameterError,
                     UnsupportedVariantError)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ConvergenceError", "DomainError", "ParameterError",
    "UnsupportedVariantError",
]
