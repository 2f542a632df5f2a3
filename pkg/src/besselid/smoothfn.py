"""High-order derivative ladders for smooth functions on (0, oo).

Complete-monotonicity and Bernstein checks need derivatives up to order
eight or ten with enough accuracy that sign tests are meaningful.
Finite differencing cannot deliver that, so each function of interest
is represented by a "ladder" object that produces the whole derivative
vector analytically:

* rational terms c / (x + r)^p differentiate in closed form;
* Mittag-Leffler sums over squared Bessel zeros reduce to rational
  ladders over cached zeros, with a digamma closed form for the tail;
* Stieltjes transforms with a fixed positive kernel reduce to rational
  ladders over frozen double-exponential quadrature nodes;
* anything with a complex-analytic closed form is differentiated by
  Cauchy's integral formula on a circle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .errors import DomainError, ParameterError
from .specfun import bessel_zeros

__all__ = [
    "RationalLadder", "PowerLadder", "MLSumLadder", "StieltjesLadder",
    "CauchyLadder", "SumLadder", "frozen_expsinh_nodes",
    "k_ratio_ladder", "falling_factorial",
]


def falling_factorial(p: float, n: int) -> float:
    """p (p-1) ... (p-n+1); empty product for n = 0."""
    out = 1.0
    for k in range(n):
        out *= p - k
    return out


class Ladder:
    """Base: derivatives(x, max_order) -> array of f^(n)(x), n = 0..max_order."""

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        raise NotImplementedError

    def value(self, x: float) -> float:
        return float(self.derivatives(x, 0)[0])

    def __add__(self, other):
        return SumLadder((self, other))

    def __neg__(self):
        return SumLadder((self,), (-1.0,))

    def __sub__(self, other):
        return SumLadder((self, other), (1.0, -1.0))


def _rational_ladder_vec(coefs, roots, powers, x, max_order):
    """Derivative vector of sum_i coefs[i] / (x + roots[i])^powers[i]."""
    coefs = np.asarray(coefs, dtype=float)
    base = x + np.asarray(roots, dtype=float)
    powers = np.asarray(powers, dtype=float)
    if np.any(base <= 0.0):
        raise DomainError("rational ladder evaluated at a pole or beyond")
    out = np.empty(max_order + 1)
    cur = coefs * base ** (-powers)
    out[0] = np.sum(cur)
    fac = np.ones_like(powers)
    for n in range(1, max_order + 1):
        fac = fac * (-(powers + n - 1.0))
        out[n] = np.sum(coefs * fac * base ** (-(powers + n)))
    return out


@dataclass(frozen=True)
class RationalLadder(Ladder):
    """Sum of terms coef / (x + root)^power.

    terms: tuple of (coef, root) pairs or (coef, root, power) triples.
    """

    terms: tuple

    def _unpack(self):
        coefs, roots, powers = [], [], []
        for t in self.terms:
            if len(t) == 2:
                c, r = t
                p = 1.0
            else:
                c, r, p = t
            coefs.append(c)
            roots.append(r)
            powers.append(p)
        return coefs, roots, powers

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        coefs, roots, powers = self._unpack()
        return _rational_ladder_vec(coefs, roots, powers, x, max_order)


@dataclass(frozen=True)
class PowerLadder(Ladder):
    """coef * (x + shift)^exponent."""

    coef: float
    exponent: float
    shift: float = 0.0

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        base = x + self.shift
        if base <= 0.0:
            raise DomainError("power ladder needs x + shift > 0")
        out = np.empty(max_order + 1)
        for n in range(max_order + 1):
            out[n] = self.coef * falling_factorial(self.exponent, n) \
                * base ** (self.exponent - n)
        return out


@dataclass(frozen=True)
class MLSumLadder(Ladder):
    """Mittag-Leffler sum over squared Bessel zeros:

        f(x) = sum_{n >= 1} 1 / (x + j_{mu,n}^2 / a^2)
             = (a / (2 sqrt x)) I_{mu+1}(a sqrt x) / I_mu(a sqrt x).

    The first n_zeros zeros are summed explicitly; the order-0 tail is
    evaluated in closed form through the digamma function applied to
    the McMahon approximation of the remaining zeros, and higher-order
    tails are negligible at this truncation depth.
    """

    mu: float
    a: float
    n_zeros: int = 4000

    def __post_init__(self):
        if self.mu <= -1.0 or self.a <= 0.0:
            raise ParameterError("MLSumLadder requires mu > -1 and a > 0")

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        if x <= 0.0:
            raise DomainError("MLSumLadder requires x > 0")
        a, mu, nz = self.a, self.mu, self.n_zeros
        roots = (bessel_zeros(mu, nz) / a) ** 2
        out = _rational_ladder_vec(np.ones(nz), roots, np.ones(nz),
                                   x, max_order)
        # order-0 tail: McMahon zeros j ~ pi (n + delta), j^2 ~ beta^2 -
        # (4 mu^2 - 1)/4; the shifted-argument digamma identity
        # sum_{n >= 0} 1/((n + c)^2 + q^2) = Im psi(c + i q) / q
        # then sums the remainder in closed form
        delta = 0.5 * mu - 0.25
        xs = x - (4.0 * mu * mu - 1.0) / (4.0 * a * a)
        q2 = a * a * xs / (np.pi * np.pi)
        c = nz + 1.0 + delta
        r = a * a / (np.pi * np.pi)
        if q2 > 0.0:
            q = np.sqrt(q2)
            tail = r * float(np.imag(_sp.digamma(c + 1j * q))) / q
        elif q2 < 0.0:
            p = np.sqrt(-q2)
            tail = r * float(_sp.digamma(c + p) - _sp.digamma(c - p)) / (2.0 * p)
        else:
            tail = r * float(_sp.polygamma(1, c))
        out[0] += tail
        return out


def frozen_expsinh_nodes(n_per_unit: int = 20, u_max: float = 6.0):
    """Fixed exp-sinh node/weight set on (0, oo): t = exp((pi/2) sinh u)."""
    h = 1.0 / n_per_unit
    u = np.arange(-u_max, u_max + 0.5 * h, h)
    s = 0.5 * np.pi * np.sinh(u)
    t = np.exp(s)
    w = h * 0.5 * np.pi * np.cosh(u) * t
    return t, w


@dataclass(frozen=True)
class StieltjesLadder(Ladder):
    """f(x) = sum_i masses[i] / (x + nodes[i]); the discretization of a
    Stieltjes transform with positive kernel on frozen quadrature nodes."""

    nodes: tuple
    masses: tuple

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        n = len(self.nodes)
        return _rational_ladder_vec(self.masses, self.nodes, np.ones(n),
                                    x, max_order)


def k_ratio_ladder(mu: float, a: float, n_per_unit: int = 24,
                   u_max: float = 6.0) -> StieltjesLadder:
    """Ladder for (a / (2 sqrt x)) K_{mu-1}(a sqrt x) / K_mu(a sqrt x)
    via its Stieltjes representation with kernel
    (1/pi^2) / (t [J_mu^2(a sqrt t) + Y_mu^2(a sqrt t)])."""
    if a <= 0.0:
        raise ParameterError("k_ratio_ladder requires a > 0")
    t, w = frozen_expsinh_nodes(n_per_unit, u_max)
    r = a * np.sqrt(t)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        dens = 1.0 / (np.pi * np.pi * t
                      * (_sp.jv(mu, r) ** 2 + _sp.yv(mu, r) ** 2))
        m = w * dens
    keep = np.isfinite(m) & (m > 0.0)
    return StieltjesLadder(tuple(t[keep]), tuple(m[keep]))


@dataclass(frozen=True)
class CauchyLadder(Ladder):
    """Derivatives of a complex-analytic function by Cauchy's formula:

        f^(n)(x) = n! r^{-n} (1/M) sum_k f(x + r e^{i theta_k}) e^{-i n theta_k}

    The radius is radius_factor * (x + radius_shift); radius_shift > 0
    widens the circle when the nearest singularity sits left of the
    origin instead of at it (the circle must stay inside the
    analyticity domain).
    """

    fn: object
    radius_factor: float = 0.5
    n_points: int = 64
    radius_shift: float = 0.0

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        if x <= 0.0:
            raise DomainError("CauchyLadder requires x > 0")
        r = self.radius_factor * (x + self.radius_shift)
        m = self.n_points
        theta = 2.0 * np.pi * np.arange(m) / m
        z = x + r * np.exp(1j * theta)
        vals = np.asarray(self.fn(z), dtype=complex)
        if not np.all(np.isfinite(vals)):
            raise DomainError("function returned non-finite values on circle")
        coef = np.fft.fft(vals) / m
        out = np.empty(max_order + 1)
        fact = 1.0
        for n in range(max_order + 1):
            if n > 0:
                fact *= n
            out[n] = float(np.real(coef[n])) * fact / r ** n
        return out


class SumLadder(Ladder):
    """Linear combination of ladders."""

    def __init__(self, parts, coefs=None):
        self.parts = tuple(parts)
        self.coefs = tuple(coefs) if coefs is not None \
            else (1.0,) * len(self.parts)
        if len(self.parts) != len(self.coefs):
            raise ParameterError("parts and coefs must match in length")

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        out = np.zeros(max_order + 1)
        for c, p in zip(self.coefs, self.parts):
            out += c * p.derivatives(x, max_order)
        return out
