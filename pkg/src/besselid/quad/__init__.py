"""Quadrature engines used throughout the package."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from .accel import iterated_average, levin_u, wynn_epsilon
from .gauss_kronrod import integrate_finite
from .oscillatory import OscSpec, integrate_oscillatory
from .result import QuadResult
from .tanhsinh import integrate_singular_decay, tanh_sinh_finite

__all__ = [
    "QuadResult",
    "OscSpec",
    "integrate_finite",
    "tanh_sinh_finite",
    "integrate_singular_decay",
    "integrate_oscillatory",
    "numeric_laplace",
    "levin_u",
    "wynn_epsilon",
    "iterated_average",
]


def numeric_laplace(f, x: float, tol: float = 1e-10) -> QuadResult:
    """Numeric Laplace transform: integral of e^{-x t} f(t) over (0, oo)."""
    if x <= 0.0:
        raise DomainError("numeric_laplace requires x > 0")

    def g(t):
        with np.errstate(over="ignore", under="ignore"):
            return np.exp(-x * t) * f(t)

    return integrate_singular_decay(g, tol=tol)
