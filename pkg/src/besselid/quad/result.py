"""Common result record for the quadrature routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class QuadResult:
    value: float
    err_estimate: float
    n_evals: int
    converged: bool
    info: dict = field(default_factory=dict)

    def __float__(self):
        return self.value
