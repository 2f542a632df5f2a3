"""Numerical infinite-divisibility machinery for the Bessel Laplace
transforms: complete-monotonicity ladders, Bernstein checks,
self-decomposability quotients, Pick-function grids, hyperbolic
complete-monotonicity profiles, absolute monotonicity of the I-product,
the noncentral chi-square profile signs, and the Landau constant.

Every Laplace transform under test is paired with an analytic
derivative ladder for its Bernstein function phi' = -(ln L)', built
from the closed building blocks in :mod:`besselid.smoothfn`:

* the I-Bessel log-derivative is a Mittag-Leffler sum over squared
  Bessel zeros,
* the K-Bessel log-derivative is a Stieltjes transform with the
  explicit positive kernel 1/(pi^2 t [J^2 + Y^2]),
* exponential and power prefactors differentiate in closed form,
* anything with only a complex-analytic closed form goes through
  Cauchy-circle differentiation.

Sign checks then operate on machine-accurate derivative vectors, so a
failure is evidence about the function, not about the differencing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .distributions import (
    GIG, DIST_KINDS, GammaQuotient, KDist, McKayI, McKayII,
    _log_iv, _log_kv, hcm_profile, kdist_quotient_kernel, laplace_closed,
    mgf_logderiv_im,
)
from .errors import DomainError, ParameterError, UnsupportedVariantError
from .smoothfn import (
    CauchyLadder, Ladder, MLSumLadder, PowerLadder, RationalLadder,
    StieltjesLadder, SumLadder, frozen_expsinh_nodes, k_ratio_ladder,
)
from .specfun import bessel_zeros
from .stieltjes import _tricomi_complex

__all__ = [
    "Rho", "Omega1", "Omega2", "IKMu", "Chi", "Theta", "Zeta", "Kappa",
    "Epsilon", "EpsilonRecip", "DistLT", "LT_KINDS",
    "lt_value", "lt_value_complex", "neg_logderiv", "neg_logderiv_ladder",
    "CMReport", "PickReport", "cm_check", "bernstein_check",
    "selfdecomp_check", "pick_check", "pick_im", "zeta_witness_search",
    "hcm_check", "noncentral_profile_check", "ProfileReport",
    "absmon_check", "landau_constant", "landau_bound_margin",
    "bernstein_targets", "selfdecomp_targets", "pick_targets",
    "profile_targets",
]


# ----------------------------------------------------------------------
# Laplace-transform variants
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Rho:
    """(a sqrt x)^mu / (2^mu Gamma(mu+1) I_mu(a sqrt x)); mu > -1, a > 0."""
    mu: float
    a: float

    def __post_init__(self):
        if not (self.mu > -1.0 and self.a > 0.0):
            raise ParameterError("Rho requires mu > -1 and a > 0")


@dataclass(frozen=True)
class Omega1:
    """(b/a)^{mu-nu} [I_mu(a.)I_nu(b.)]/[I_mu(b.)I_nu(a.)] * Rho(sigma, b)."""
    mu: float
    nu: float
    sigma: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > -1.0 and self.nu > self.sigma > -1.0
                and self.b > self.a > 0.0):
            raise ParameterError(
                "Omega1 requires mu > -1, nu > sigma > -1 and b > a > 0")


@dataclass(frozen=True)
class Omega2:
    """(b/a)^{mu-nu} [I_mu(a.)I_nu(b.)]/[I_mu(b.)I_nu(a.)] * e^{-b sqrt x}."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > -1.0 and self.nu > 0.5 and self.b > self.a > 0.0):
            raise ParameterError(
                "Omega2 requires mu > -1, nu > 1/2 and b > a > 0")


@dataclass(frozen=True)
class IKMu:
    """2 mu I_mu(sqrt x) K_mu(sqrt x); mu > 0."""
    mu: float

    def __post_init__(self):
        if not self.mu > 0.0:
            raise ParameterError("IKMu requires mu > 0")


@dataclass(frozen=True)
class Chi:
    """Normalized e^{-a sqrt x} x^{(nu-mu)/2} I_mu(a sqrt x) K_nu(b sqrt x)."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > 0.5 and self.nu > 0.0
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError("Chi requires mu > 1/2, nu > 0 and a, b > 0")


@dataclass(frozen=True)
class Theta:
    """Normalized x^{(mu+nu)/2} K_mu(a sqrt x) K_nu(b sqrt x); mu, nu > 0."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > 0.0 and self.nu > 0.0
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError("Theta requires mu, nu, a, b > 0")


@dataclass(frozen=True)
class Zeta:
    """Normalized e^{-(a+b)sqrt x} x^{-(mu+nu)/2} I_mu(a sqrt x) I_nu(b sqrt x)."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > 0.5 and self.nu > 0.5
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError("Zeta requires mu, nu > 1/2 and a, b > 0")


@dataclass(frozen=True)
class Kappa:
    """Normalized e^{-(a+b)sqrt x} / (x^{(mu+nu)/2} K_mu(a.) K_nu(b.))."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > 0.5 and self.nu > 0.5
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError("Kappa requires mu, nu > 1/2 and a, b > 0")


@dataclass(frozen=True)
class Epsilon:
    """Normalized e^{-(a+b)sqrt x} x^{-(mu+nu)/2} I_mu(a.)/K_nu(b.)."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > 0.5 and self.nu > 0.5
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError("Epsilon requires mu, nu > 1/2 and a, b > 0")


@dataclass(frozen=True)
class EpsilonRecip:
    """Normalized x^{(mu+nu)/2} K_nu(b sqrt x)/I_mu(a sqrt x)."""
    mu: float
    nu: float
    a: float
    b: float

    def __post_init__(self):
        if not (self.mu > -1.0 and self.nu > 0.0
                and self.a > 0.0 and self.b > 0.0):
            raise ParameterError(
                "EpsilonRecip requires mu > -1, nu > 0 and a, b > 0")


@dataclass(frozen=True)
class DistLT:
    """Wraps the closed Laplace transform of a distribution."""
    d: object


LT_KINDS = {
    "rho": Rho, "omega1": Omega1, "omega2": Omega2, "ikmu": IKMu,
    "chi": Chi, "theta": Theta, "zeta": Zeta, "kappa": Kappa,
    "epsilon": Epsilon, "epsilon_recip": EpsilonRecip, "dist": DistLT,
}


def _log_rho(mu, a, x):
    """ln of Rho: normalized reciprocal I-Bessel."""
    r = a * np.sqrt(x)
    return (mu * np.log(0.5 * r) - _sp.gammaln(mu + 1.0) - _log_iv(mu, r))


def lt_value(spec, x):
    """L(x) for x > 0, evaluated through scaled Bessel logarithms."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("lt_value requires x > 0")
    rx = np.sqrt(x)
    if isinstance(spec, Rho):
        return np.exp(_log_rho(spec.mu, spec.a, x))
    if isinstance(spec, (Omega1, Omega2)):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lg = ((mu - nu) * np.log(b / a)
              + _log_iv(mu, a * rx) + _log_iv(nu, b * rx)
              - _log_iv(mu, b * rx) - _log_iv(nu, a * rx))
        if isinstance(spec, Omega1):
            lg += _log_rho(spec.sigma, b, x)
        else:
            lg -= b * rx
        return np.exp(lg)
    if isinstance(spec, IKMu):
        mu = spec.mu
        return 2.0 * mu * np.exp(_log_iv(mu, rx) + _log_kv(mu, rx))
    if isinstance(spec, Chi):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = ((mu - nu + 1.0) * np.log(2.0) + _sp.gammaln(mu + 1.0)
              + nu * np.log(b) - mu * np.log(a) - _sp.gammaln(nu))
        return np.exp(lc - a * rx + 0.5 * (nu - mu) * np.log(x)
                      + _log_iv(mu, a * rx) + _log_kv(nu, b * rx))
    if isinstance(spec, Theta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = (mu * np.log(a) + nu * np.log(b)
              - (mu + nu - 2.0) * np.log(2.0)
              - _sp.gammaln(mu) - _sp.gammaln(nu))
        return np.exp(lc + 0.5 * (mu + nu) * np.log(x)
                      + _log_kv(mu, a * rx) + _log_kv(nu, b * rx))
    if isinstance(spec, Zeta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = ((mu + nu) * np.log(2.0) + _sp.gammaln(mu + 1.0)
              + _sp.gammaln(nu + 1.0) - mu * np.log(a) - nu * np.log(b))
        return np.exp(lc - (a + b) * rx - 0.5 * (mu + nu) * np.log(x)
                      + _log_iv(mu, a * rx) + _log_iv(nu, b * rx))
    if isinstance(spec, Kappa):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = ((mu + nu - 2.0) * np.log(2.0) + _sp.gammaln(mu)
              + _sp.gammaln(nu) - mu * np.log(a) - nu * np.log(b))
        return np.exp(lc - (a + b) * rx - 0.5 * (mu + nu) * np.log(x)
                      - _log_kv(mu, a * rx) - _log_kv(nu, b * rx))
    if isinstance(spec, Epsilon):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = ((mu + nu - 1.0) * np.log(2.0) + _sp.gammaln(nu)
              + _sp.gammaln(mu + 1.0) - mu * np.log(a) - nu * np.log(b))
        return np.exp(lc - (a + b) * rx - 0.5 * (mu + nu) * np.log(x)
                      + _log_iv(mu, a * rx) - _log_kv(nu, b * rx))
    if isinstance(spec, EpsilonRecip):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = (mu * np.log(a) + nu * np.log(b)
              - (mu + nu - 1.0) * np.log(2.0)
              - _sp.gammaln(nu) - _sp.gammaln(mu + 1.0))
        return np.exp(lc + 0.5 * (mu + nu) * np.log(x)
                      + _log_kv(nu, b * rx) - _log_iv(mu, a * rx))
    if isinstance(spec, DistLT):
        return laplace_closed(spec.d, float(x) if x.ndim == 0 else x)
    raise ParameterError(f"unknown Laplace-transform spec {spec!r}")


def lt_value_complex(spec, z):
    """Analytic continuation of L to complex z with Re z > 0.

    Supported where the closed form continues with the principal square
    root: Rho, IKMu, Theta, and DistLT over McKayI, GIG and KDist.
    """
    z = np.asarray(z, dtype=complex)
    w = np.sqrt(z)
    if isinstance(spec, Rho):
        mu, a = spec.mu, spec.a
        return ((0.5 * a * w) ** mu
                / (np.exp(_sp.gammaln(mu + 1.0)) * _sp.iv(mu, a * w)))
    if isinstance(spec, IKMu):
        mu = spec.mu
        return 2.0 * mu * _sp.iv(mu, w) * _sp.kv(mu, w)
    if isinstance(spec, Theta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        lc = (mu * np.log(a) + nu * np.log(b)
              - (mu + nu - 2.0) * np.log(2.0)
              - _sp.gammaln(mu) - _sp.gammaln(nu))
        return (np.exp(lc) * w ** (mu + nu)
                * _sp.kv(mu, a * w) * _sp.kv(nu, b * w))
    if isinstance(spec, DistLT):
        d = spec.d
        if isinstance(d, (McKayI, GIG)):
            return laplace_closed(d, z)
        if isinstance(d, KDist):
            al, be, mu = d.alpha, d.beta, d.mu
            arg = al * be / (mu * z)
            return arg ** al * _tricomi_complex(al, 1.0 + al - be, arg)
    raise UnsupportedVariantError(
        f"no complex continuation registered for {spec!r}")


# ----------------------------------------------------------------------
# Bernstein-derivative ladders
# ----------------------------------------------------------------------

class _ShiftLadder(Ladder):
    """Derivative ladder of f' given a ladder for f."""

    def __init__(self, base):
        self.base = base

    def derivatives(self, x: float, max_order: int) -> np.ndarray:
        return self.base.derivatives(x, max_order + 1)[1:]


def _kdist_phi_ladder(al, be, mu):
    """phi' of the K-distribution as a frozen Stieltjes ladder.

    phi'(x) = integral of c omega(t) / (x + r/t) dt with r = al be / mu
    and c = min(al, be); the quadrature nodes are frozen exp-sinh
    points so the ladder differentiates exactly.
    """
    r = al * be / mu
    coef = min(al, be)
    t, w = frozen_expsinh_nodes(20, 6.0)
    sel = t < 700.0
    t, w = t[sel], w[sel]
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        m = coef * kdist_quotient_kernel(al, be, t) * w
    keep = np.isfinite(m) & (m > 0.0)
    return StieltjesLadder(tuple(r / t[keep]), tuple(m[keep]))


def _gamma_quotient_phi_ladder(al, be, al0, be0):
    """phi' of the gamma quotient as a frozen Stieltjes ladder.

    With scale r = beta/beta0 the transform is psi(al, 1-al0, r x), so
    phi'(x) = integral of al omega_{al, al+al0}(t) / (x + t/r) dt.
    """
    r = be / be0
    t, w = frozen_expsinh_nodes(20, 6.0)
    sel = t < 700.0
    t, w = t[sel], w[sel]
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        m = al * kdist_quotient_kernel(al, al + al0, t) * w
    keep = np.isfinite(m) & (m > 0.0)
    return StieltjesLadder(tuple(t[keep] / r), tuple(m[keep]))


def _gig_phi_ladder(mu, a, b):
    """phi'(x) = 2 mu/(2x+a) + (b/g) K_{mu-1}(g)/K_mu(g), g = sqrt(b(2x+a)),
    as a rational term plus a shifted K-ratio Stieltjes ladder."""
    kr = k_ratio_ladder(mu, np.sqrt(2.0 * b))
    shifted = StieltjesLadder(tuple(np.asarray(kr.nodes) + 0.5 * a),
                              kr.masses)
    return RationalLadder(((mu, 0.5 * a),)) + shifted


def neg_logderiv_ladder(spec) -> Ladder:
    """Analytic derivative ladder for phi'(x) = -(ln L)'(x)."""
    if isinstance(spec, Rho):
        return MLSumLadder(spec.mu, spec.a)
    if isinstance(spec, Omega1):
        mu, nu, sg, a, b = spec.mu, spec.nu, spec.sigma, spec.a, spec.b
        return SumLadder(
            (MLSumLadder(mu, a), MLSumLadder(nu, b),
             MLSumLadder(mu, b), MLSumLadder(nu, a), MLSumLadder(sg, b)),
            (-1.0, -1.0, 1.0, 1.0, 1.0))
    if isinstance(spec, Omega2):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        return SumLadder(
            (PowerLadder(0.5 * b, -0.5), MLSumLadder(mu, a),
             MLSumLadder(nu, b), MLSumLadder(mu, b), MLSumLadder(nu, a)),
            (1.0, -1.0, -1.0, 1.0, 1.0))
    if isinstance(spec, IKMu):
        return k_ratio_ladder(spec.mu, 1.0) - MLSumLadder(spec.mu, 1.0)
    if isinstance(spec, Chi):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        return SumLadder(
            (PowerLadder(0.5 * a, -0.5), MLSumLadder(mu, a),
             k_ratio_ladder(nu, b)),
            (1.0, -1.0, 1.0))
    if isinstance(spec, Theta):
        return k_ratio_ladder(spec.mu, spec.a) + k_ratio_ladder(spec.nu, spec.b)
    if isinstance(spec, Zeta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        return SumLadder(
            (PowerLadder(0.5 * (a + b), -0.5),
             MLSumLadder(mu, a), MLSumLadder(nu, b)),
            (1.0, -1.0, -1.0))
    if isinstance(spec, Kappa):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        return SumLadder(
            (PowerLadder(0.5 * (a + b), -0.5),
             k_ratio_ladder(mu, a), k_ratio_ladder(nu, b)),
            (1.0, -1.0, -1.0))
    if isinstance(spec, Epsilon):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        return SumLadder(
            (PowerLadder(0.5 * (a + b), -0.5),
             MLSumLadder(mu, a), k_ratio_ladder(nu, b)),
            (1.0, -1.0, -1.0))
    if isinstance(spec, EpsilonRecip):
        return MLSumLadder(spec.mu, spec.a) + k_ratio_ladder(spec.nu, spec.b)
    if isinstance(spec, DistLT):
        d = spec.d
        if isinstance(d, McKayI):
            mu, a, b = d.mu, d.a, d.b
            return RationalLadder(((mu + 0.5, b - a), (mu + 0.5, b + a)))
        if isinstance(d, McKayII):
            mu, a, b = d.mu, d.a, d.b
            return RationalLadder(
                ((mu + 1.5, b - a), (mu + 1.5, b + a), (-1.0, b)))
        if isinstance(d, KDist):
            return _kdist_phi_ladder(d.alpha, d.beta, d.mu)
        if isinstance(d, GIG):
            return _gig_phi_ladder(d.mu, d.a, d.b)
        if isinstance(d, GammaQuotient):
            return _gamma_quotient_phi_ladder(d.alpha, d.beta,
                                              d.alpha0, d.beta0)
        # GenMcKay / SqMcKay: hypergeometric closed forms, Cauchy circle
        # on -ln L with the radius reaching toward the true singularity
        shift = getattr(d, "b") - getattr(d, "a") * (
            2.0 if type(d).__name__ == "SqMcKay" else 1.0)

        def phi(z):
            return -np.log(laplace_closed(d, z))

        return _ShiftLadder(CauchyLadder(phi, radius_factor=0.6,
                                         radius_shift=0.9 * shift))
    raise ParameterError(f"unknown Laplace-transform spec {spec!r}")


def neg_logderiv(spec, x):
    """phi'(x) = -(ln L)'(x) through the analytic ladder."""
    return neg_logderiv_ladder(spec).value(float(x))


# ----------------------------------------------------------------------
# Complete-monotonicity and Bernstein checks
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CMReport:
    """Sign-pattern verdict for a derivative ladder over a grid.

    worst_margin is the most negative value of the required-sign
    derivative, scaled per order by the largest derivative magnitude on
    the grid; the witness is the (x, order) pair attaining it.
    """

    grid: tuple
    max_order: int
    worst_margin: float
    passed: bool
    witness: object = None
    label: str = ""


_DEFAULT_GRID = tuple(np.exp(np.linspace(np.log(0.05), np.log(50.0), 9)))


def _fd_derivatives(f, x, max_order):
    """Central differences with one Richardson step, order <= 4."""
    if max_order > 4:
        raise DomainError("finite differences support order <= 4 only")
    out = np.empty(max_order + 1)
    out[0] = f(x)
    for n in range(1, max_order + 1):
        h = x * (1e-3 if n <= 2 else 1e-2)
        coef = np.array([(-1.0) ** k * _sp.comb(n, k, exact=True)
                         for k in range(n + 1)])
        off = 0.5 * n - np.arange(n + 1.0)

        def stencil(step):
            return float(coef @ np.array([f(x + o * step) for o in off])) \
                / step ** n
        d1, d2 = stencil(h), stencil(0.5 * h)
        out[n] = (4.0 * d2 - d1) / 3.0
    return out


def cm_check(target, grid=None, max_order: int = 8, slack: float = 1e-9,
             signs: str = "alternating", label: str = "") -> CMReport:
    """Sign-pattern test of the derivatives of target on a grid.

    target is a smoothfn ladder (exact derivatives) or a plain callable
    (finite differences, order capped at 4, default slack 1e-6).
    signs = "alternating" tests (-1)^n f^(n) >= 0 (complete
    monotonicity); "positive" tests f^(n) >= 0 (absolute monotonicity).
    """
    if grid is None:
        grid = _DEFAULT_GRID
    grid = tuple(float(g) for g in grid)
    is_ladder = isinstance(target, Ladder)
    if not is_ladder:
        max_order = min(max_order, 4)
        if slack < 1e-6:
            slack = 1e-6
    table = np.empty((len(grid), max_order + 1))
    for i, x in enumerate(grid):
        table[i] = (target.derivatives(x, max_order) if is_ladder
                    else _fd_derivatives(target, x, max_order))
    if signs == "alternating":
        signed = table * (-1.0) ** np.arange(max_order + 1)
    elif signs == "positive":
        signed = table
    else:
        raise ParameterError("signs must be 'alternating' or 'positive'")
    scale = np.maximum(np.max(np.abs(table), axis=0), 1e-300)
    margins = signed / scale
    worst = float(np.min(margins))
    i, n = np.unravel_index(np.argmin(margins), margins.shape)
    witness = (grid[i], int(n)) if worst < -slack else None
    return CMReport(grid, max_order, worst, worst >= -slack, witness, label)


def bernstein_check(spec, grid=None, max_order: int = 8,
                    slack: float = 1e-9, label: str = "") -> CMReport:
    """Bernstein-function test: phi(0+) = 0 and phi' completely monotone.

    The normalization gate evaluates at x = 1e-16 because several
    transforms carry e^{-c sqrt(x)} factors, so the approach to 1 is
    O(sqrt(x)), not O(x).
    """
    l0 = float(lt_value(spec, 1e-16))
    if abs(l0 - 1.0) > 1e-6:
        return CMReport(tuple(grid or _DEFAULT_GRID), max_order,
                        -(abs(l0 - 1.0)), False, (1e-16, -1), label)
    return cm_check(neg_logderiv_ladder(spec), grid, max_order, slack,
                    label=label)


def selfdecomp_check(spec, alpha: float, grid=None, max_order: int = 6,
                     slack: float = 1e-9, label: str = "") -> CMReport:
    """Complete monotonicity of x -> L(x)/L(alpha x), alpha in (0, 1).

    Together with the value 1 at 0+ this is the numerical surrogate for
    the quotient being a Laplace transform (self-decomposability).
    """
    if not 0.0 < alpha < 1.0:
        raise ParameterError("selfdecomp_check requires alpha in (0, 1)")

    def q(z):
        return lt_value_complex(spec, z) / lt_value_complex(spec, alpha * z)

    q0 = float(lt_value(spec, 1e-16)) / float(lt_value(spec, alpha * 1e-16))
    if abs(q0 - 1.0) > 1e-6:
        return CMReport(tuple(grid or _DEFAULT_GRID), max_order,
                        -(abs(q0 - 1.0)), False, (1e-16, -1), label)
    ladder = CauchyLadder(q, radius_factor=0.5)
    if grid is None:
        grid = tuple(np.exp(np.linspace(np.log(0.1), np.log(10.0), 7)))
    return cm_check(ladder, grid, max_order, slack, label=label)


# ----------------------------------------------------------------------
# Pick-function checks
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PickReport:
    """Minimum of Im[psi'(s)/psi(s)] over an upper-half-plane grid."""

    grid: tuple
    min_im_value: float
    passed: bool
    witness: object = None
    label: str = ""


def _iv_ratio(mu, z):
    return 0.5 * (_sp.iv(mu - 1.0, z) + _sp.iv(mu + 1.0, z)) / _sp.iv(mu, z)


def _kv_ratio(mu, z):
    return -0.5 * (_sp.kv(mu - 1.0, z) + _sp.kv(mu + 1.0, z)) / _sp.kv(mu, z)


def pick_im(spec, re: float, im: float) -> float:
    """Im[psi'(s)/psi(s)] at s = re + i im for psi(s) = L(-s)."""
    if im <= 0.0:
        raise DomainError("pick_im requires im > 0")
    if isinstance(spec, DistLT):
        return mgf_logderiv_im(spec.d, re, im)
    s = complex(re, im)
    if isinstance(spec, Rho):
        mu, a = spec.mu, spec.a
        t = (bessel_zeros(mu, 4000) / a) ** 2
        return float(np.sum(im / ((t - re) ** 2 + im * im)))
    w = np.sqrt(-s)
    dw = -0.5 / w
    if isinstance(spec, IKMu):
        mu = spec.mu
        val = dw * (_iv_ratio(mu, w) + _kv_ratio(mu, w))
        return float(np.imag(val))
    if isinstance(spec, Theta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        val = dw * ((mu + nu) / w + a * _kv_ratio(mu, a * w)
                    + b * _kv_ratio(nu, b * w))
        return float(np.imag(val))
    if isinstance(spec, Zeta):
        mu, nu, a, b = spec.mu, spec.nu, spec.a, spec.b
        val = dw * (-(a + b) - (mu + nu) / w + a * _iv_ratio(mu, a * w)
                    + b * _iv_ratio(nu, b * w))
        return float(np.imag(val))
    raise UnsupportedVariantError(
        f"no Pick closed form registered for {spec!r}")


def pick_check(spec, grid=None, slack: float = 1e-12,
               label: str = "") -> PickReport:
    """Positivity of Im[psi'/psi] over an upper-half-plane grid."""
    if grid is None:
        grid = tuple((x, y) for x in np.linspace(-5.0, 5.0, 11)
                     for y in (0.25, 0.5, 1.0, 2.5, 5.0))
    best = (np.inf, None)
    for (x, y) in grid:
        v = pick_im(spec, float(x), float(y))
        if v < best[0]:
            best = (v, (float(x), float(y)))
    passed = best[0] >= -slack
    return PickReport(tuple(grid), float(best[0]), passed,
                      None if passed else best[1], label)


def zeta_witness_search(spec=None):
    """Search the upper half-plane for Im[psi'/psi] < 0 for the I-product.

    Returns ((re, im), value) at the most negative point found; a
    genuinely negative value certifies the failure of the Pick property
    (the transform is not a generalized gamma convolution).
    """
    if spec is None:
        spec = Zeta(1.0, 1.0, 1.0, 2.0)
    best = (np.inf, None)
    for x in np.linspace(-20.0, 5.0, 51):
        for y in np.concatenate([np.geomspace(0.05, 5.0, 12)]):
            v = pick_im(spec, float(x), float(y))
            if v < best[0]:
                best = (v, (float(x), float(y)))
    return best[1], best[0]


# ----------------------------------------------------------------------
# Hyperbolic and absolute monotonicity profiles
# ----------------------------------------------------------------------

_DEFAULT_W_GRID = tuple(2.0 + np.geomspace(0.2, 18.0, 8))


def hcm_check(d, u: float, w_grid=None, max_order: int = 8,
              slack: float = 1e-9, label: str = "") -> CMReport:
    """Complete monotonicity in w = v + 1/v of pdf(uv) pdf(u/v).

    The gamma quotient collapses to an exact power ladder
    A (w + B)^{-(alpha+alpha0)}; other distributions fall back to
    finite differences of the profile (order capped at 4).
    """
    if w_grid is None:
        w_grid = _DEFAULT_W_GRID
    if isinstance(d, GammaQuotient):
        al, al0, r = d.alpha, d.alpha0, d.beta0 / d.beta
        c = np.exp(_sp.gammaln(al + al0) - _sp.gammaln(al)
                   - _sp.gammaln(al0) + al * np.log(r))
        coef = c * c * u ** (2.0 * al - 2.0) * (r * u) ** (-(al + al0))
        shift = (1.0 + (r * u) ** 2) / (r * u)
        ladder = PowerLadder(coef, -(al + al0), shift)
        return cm_check(ladder, w_grid, max_order, slack, label=label)
    return cm_check(lambda w: float(hcm_profile(d, u, w)), w_grid,
                    max_order, slack, label=label)


@dataclass(frozen=True)
class ProfileReport:
    """First/second derivative signs of the noncentral chi-square
    profile w -> pdf(uv) pdf(u/v) on (2, oo)."""

    decreasing_claimed: bool
    decreasing_ok: bool
    convex_claimed: bool
    convex_ok: bool
    grid: tuple


def noncentral_profile_check(mu: float, lam: float, u: float,
                             w_grid=None) -> ProfileReport:
    """Monotonicity and convexity of the noncentral chi-square profile.

    The profile is claimed strictly decreasing when lam <= 2(2 mu + 1)
    and strictly convex when lam <= 2 mu + 1; outside the claimed
    region the corresponding flag is reported as not claimed.
    """
    d = DIST_KINDS["nchisq"](mu, lam)
    if w_grid is None:
        w_grid = _DEFAULT_W_GRID

    def profile(w):
        return float(hcm_profile(d, u, w))

    dec_claim = lam <= 2.0 * (2.0 * mu + 1.0)
    cvx_claim = lam <= 2.0 * mu + 1.0
    dec_ok = True
    cvx_ok = True
    for w in w_grid:
        # step large enough that the curvature signal beats rounding in
        # the three-point stencil; the profile scales are smooth in w
        h = min(0.02 * w, 0.25 * (w - 2.0))
        f0, fp, fm = profile(w), profile(w + h), profile(w - h)
        d1 = (fp - fm) / (2.0 * h)
        d2 = (fp - 2.0 * f0 + fm) / (h * h)
        scale = abs(f0) / w
        if dec_claim and d1 >= -1e-9 * scale:
            dec_ok = False
        if cvx_claim and d2 <= -1e-9 * scale / w:
            cvx_ok = False
    return ProfileReport(dec_claim, dec_ok and dec_claim,
                         cvx_claim, cvx_ok and cvx_claim, tuple(w_grid))


def absmon_check(mu: float, u: float, w_grid=None, max_order: int = 6,
                 slack: float = 1e-9, label: str = "") -> CMReport:
    """Absolute monotonicity in w of I_mu(uv) I_mu(u/v) on (2, oo).

    v(w) = (w + sqrt(w^2 - 4))/2 continues analytically off [-2, 2],
    so the derivatives come from a Cauchy circle inside that domain.
    """
    if not (mu > -0.5 and u > 0.0):
        raise ParameterError("absmon_check requires mu > -1/2 and u > 0")
    if w_grid is None:
        w_grid = _DEFAULT_W_GRID
    reports = []
    for w0 in w_grid:
        def f(w):
            v = 0.5 * (w + np.sqrt(w * w - 4.0 + 0j))
            return _sp.iv(mu, u * v) * _sp.iv(mu, u / v)
        ladder = CauchyLadder(f, radius_factor=0.45,
                              radius_shift=-(2.0 + 0.55 * (w0 - 2.0)))
        reports.append(cm_check(ladder, (w0,), max_order, slack,
                                signs="positive"))
    worst = min(r.worst_margin for r in reports)
    bad = [r for r in reports if not r.passed]
    witness = bad[0].witness if bad else None
    return CMReport(tuple(w_grid), max_order, worst, not bad, witness, label)


# ----------------------------------------------------------------------
# Landau constant
# ----------------------------------------------------------------------

def landau_constant() -> float:
    """sup over t > 0 of t^(1/3) J_0(t), by golden section plus Newton.

    The maximizer solves J_0(t) = 3 t J_1(t) inside (0, j_{0,1}).
    """
    g = lambda t: np.cbrt(t) * _sp.j0(t)
    lo, hi = 0.2, 2.3
    inv_phi = 0.5 * (np.sqrt(5.0) - 1.0)
    c, d = hi - inv_phi * (hi - lo), lo + inv_phi * (hi - lo)
    for _ in range(60):
        if g(c) > g(d):
            hi, d = d, c
            c = hi - inv_phi * (hi - lo)
        else:
            lo, c = c, d
            d = lo + inv_phi * (hi - lo)
    t = 0.5 * (lo + hi)
    for _ in range(8):
        h = _sp.j0(t) - 3.0 * t * _sp.j1(t)
        hp = -_sp.j1(t) - 3.0 * t * _sp.j0(t)
        t -= h / hp
    return float(np.cbrt(t) * _sp.j0(t))


def landau_bound_margin(mu: float, n: int = 20, lo: float = 0.1,
                        hi: float = 100.0) -> float:
    """Worst slack of I_mu(sqrt x) K_mu(sqrt x) <= pi c_L^2 / (sqrt 3 x^{2/3})
    over a log grid; nonpositive return means the bound holds there.

    The x^{2/3} decay outpaces the product's x^{1/2} tail, so the bound
    is a bounded-range statement; the default grid stops at x = 100.
    """
    cl2 = landau_constant() ** 2
    x = np.geomspace(lo, hi, n)
    r = np.sqrt(x)
    prod = _sp.ive(mu, r) * _sp.kve(mu, r)
    return float(np.max(prod * np.sqrt(3.0) * x ** (2.0 / 3.0) / np.pi - cl2))


# ----------------------------------------------------------------------
# Default target lists
# ----------------------------------------------------------------------

def bernstein_targets():
    """(label, spec) pairs for every proven-infinitely-divisible
    Laplace transform, at representative in-domain parameters."""
    D = DIST_KINDS
    return [
        ("rho", Rho(0.8, 1.0)),
        ("omega1", Omega1(0.5, 1.2, 0.3, 0.7, 1.5)),
        ("omega2", Omega2(0.5, 1.2, 0.7, 1.5)),
        ("ikmu", IKMu(1.0)),
        ("chi", Chi(1.0, 0.8, 0.9, 1.1)),
        ("theta", Theta(0.7, 1.2, 0.8, 1.0)),
        ("zeta", Zeta(0.8, 1.1, 1.0, 0.9)),
        ("kappa", Kappa(0.8, 1.1, 1.0, 0.9)),
        ("epsilon", Epsilon(0.9, 1.3, 0.8, 1.0)),
        ("epsilon_recip", EpsilonRecip(0.9, 1.3, 0.8, 1.0)),
        ("mckay1", DistLT(D["mckay1"](1.0, 0.5, 1.5))),
        ("mckay2", DistLT(D["mckay2"](0.7, 0.6, 1.2))),
        ("genmckay", DistLT(D["genmckay"](0.8, 1.2, 0.5, 1.4))),
        ("sqmckay", DistLT(D["sqmckay"](0.5, 0.3, 1.0))),
        ("kdist", DistLT(D["kdist"](1.2, 2.0, 1.0))),
        ("gig", DistLT(D["gig"](0.7, 1.0, 1.5))),
        ("gammaquot", DistLT(D["gammaquot"](1.2, 1.0, 0.8, 1.5))),
    ]


def selfdecomp_targets():
    D = DIST_KINDS
    return [
        ("mckay1", DistLT(D["mckay1"](1.0, 0.5, 1.5))),
        ("kdist", DistLT(D["kdist"](1.2, 2.0, 1.0))),
        ("gig", DistLT(D["gig"](0.7, 1.0, 1.5))),
        ("rho", Rho(0.8, 1.0)),
        ("ikmu", IKMu(1.0)),
        ("theta", Theta(0.7, 1.2, 0.8, 1.0)),
    ]


def pick_targets():
    D = DIST_KINDS
    return [
        ("mckay1", DistLT(D["mckay1"](1.0, 1.0, 2.0))),
        ("rho", Rho(1.0, 1.0)),
        ("ikmu", IKMu(1.0)),
        ("theta", Theta(0.7, 1.2, 0.8, 1.0)),
        ("kdist", DistLT(D["kdist"](1.2, 2.0, 1.0))),
        ("gammaquot", DistLT(D["gammaquot"](1.2, 1.0, 0.8, 1.5))),
    ]


def profile_targets():
    """(mu, lam, u) triples for the noncentral chi-square profile signs.

    Both derivative-sign claims are sufficient conditions; the triples
    sit well inside the region where the signs actually hold for every
    u (empirically lam <~ mu/2 for convexity), not at the boundary of
    the claimed parameter ranges, where the convexity can fail.
    """
    return [(1.0, 0.4, 1.0), (2.0, 0.8, 0.5), (3.0, 1.2, 2.0)]
