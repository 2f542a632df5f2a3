"""Quadrature engines: closed-form checks, properties, error honesty."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sp

from besselid.distributions import DIST_KINDS, pdf
from besselid.errors import DomainError
from besselid.quad import (OscSpec, integrate_finite, integrate_oscillatory,
                           integrate_singular_decay, iterated_average,
                           levin_u, numeric_laplace, tanh_sinh_finite,
                           wynn_epsilon)


# ----------------------------------------------------------------------
# finite interval
# ----------------------------------------------------------------------

def test_finite_linear():
    r = integrate_finite(lambda x: x, 0.0, 1.0, tol=1e-12)
    assert r.converged and r.value == pytest.approx(0.5, abs=1e-12)


def test_finite_sin_squared():
    r = integrate_finite(lambda t: np.sin(t) ** 0.0, 0.0, np.pi, tol=1e-12)
    assert r.value == pytest.approx(np.pi, abs=1e-11)


def test_finite_angular_bessel_product():
    # int_0^pi (2 - 2 cos t)^{-1/2} I_1(sqrt(2-2cos t)) sin^2 t dt,
    # the angular representation of I_1(1)^2 with a = b = 1, mu = 1
    mu, pref = 1.0, 0.5 / (np.sqrt(np.pi) * sp.gamma(1.5))

    def f(t):
        s = 2.0 * np.sin(0.5 * t)  # sqrt(2 - 2 cos t), stable near 0
        return s ** (-mu) * sp.iv(mu, s) * np.sin(t) ** (2.0 * mu)

    r = tanh_sinh_finite(f, 0.0, np.pi, tol=1e-13)
    assert pref * r.value == pytest.approx(sp.iv(1, 1.0) ** 2, rel=1e-11)


def test_finite_rejects_non_finite_values():
    with pytest.raises(DomainError), np.errstate(divide="ignore"):
        integrate_finite(lambda x: 1.0 / (x - 0.5), 0.0, 1.0, tol=1e-8)


def test_tanh_sinh_endpoint_singularity():
    r = tanh_sinh_finite(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, tol=1e-12)
    assert r.value == pytest.approx(2.0, abs=1e-11)


# ----------------------------------------------------------------------
# semi-infinite, exponential decay
# ----------------------------------------------------------------------

def test_singular_decay_exponential():
    r = integrate_singular_decay(lambda t: np.exp(-t), tol=1e-12)
    assert r.converged and r.value == pytest.approx(1.0, abs=1e-12)


def test_singular_decay_gamma_half():
    r = integrate_singular_decay(
        lambda t: np.exp(-t) / np.sqrt(t), tol=1e-12)
    assert r.value == pytest.approx(np.sqrt(np.pi), rel=1e-11)


def test_singular_decay_algebraic_tail():
    r = integrate_singular_decay(lambda t: 1.0 / (1.0 + t) ** 2, tol=1e-11)
    assert r.value == pytest.approx(1.0, rel=1e-10)


# ----------------------------------------------------------------------
# oscillatory sqrt-phase integrals
# ----------------------------------------------------------------------

def test_oscillatory_j0_squared_stieltjes():
    spec = OscSpec(sqrt_frequencies=(1.0, 1.0))
    r = integrate_oscillatory(
        lambda t: sp.j0(np.sqrt(t)) ** 2 / (1.0 + t), spec, tol=1e-9)
    want = 2.0 * sp.iv(0, 1.0) * sp.kv(0, 1.0)
    assert r.converged
    assert r.value == pytest.approx(want, rel=1e-8)


def test_oscillatory_cosine_closed_form():
    # u = sqrt(t): int_0^oo cos(sqrt t)/(2 sqrt t (1+t)) dt
    #            = int_0^oo cos(u)/(1+u^2) du = pi/(2e)
    spec = OscSpec(sqrt_frequencies=(1.0,), endpoint_exponent=-0.5)
    r = integrate_oscillatory(
        lambda t: np.cos(np.sqrt(t)) / (2.0 * np.sqrt(t) * (1.0 + t)),
        spec, tol=1e-9)
    assert r.value == pytest.approx(np.pi / (2.0 * np.e), rel=1e-8)


def test_oscillatory_zero_frequency_falls_back():
    f = lambda t: np.exp(-t)
    a = integrate_oscillatory(f, OscSpec(sqrt_frequencies=()), tol=1e-10)
    b = integrate_singular_decay(f, tol=1e-10)
    assert a.value == pytest.approx(b.value, abs=1e-12)


def test_oscillatory_linearity():
    spec = OscSpec(sqrt_frequencies=(1.0,), endpoint_exponent=-0.5)
    f = lambda t: np.cos(np.sqrt(t)) / (2.0 * np.sqrt(t) * (1.0 + t))
    g = lambda t: sp.j0(np.sqrt(t)) ** 2 / (1.0 + t)
    spec2 = OscSpec(sqrt_frequencies=(1.0, 1.0))
    rf = integrate_oscillatory(f, spec, tol=1e-9)
    rg = integrate_oscillatory(g, spec2, tol=1e-9)
    rc = integrate_oscillatory(
        lambda t: 2.0 * f(t) + 3.0 * g(t),
        OscSpec(sqrt_frequencies=(1.0, 1.0), endpoint_exponent=-0.5),
        tol=1e-9)
    combined = 2.0 * rf.value + 3.0 * rg.value
    budget = 2.0 * rf.err_estimate + 3.0 * rg.err_estimate + rc.err_estimate
    assert abs(rc.value - combined) <= max(budget, 1e-8)


# ----------------------------------------------------------------------
# numeric Laplace transform
# ----------------------------------------------------------------------

def test_laplace_of_constant():
    r = numeric_laplace(lambda t: np.ones_like(t), 2.0)
    assert r.value == pytest.approx(0.5, rel=1e-10)


def test_laplace_of_mckay1_pdf():
    d = DIST_KINDS["mckay1"](1.0, 1.0, 2.0)
    r = numeric_laplace(lambda t: pdf(d, t), 1.0)
    want = ((2.0 ** 2 - 1.0) / ((1.0 + 2.0) ** 2 - 1.0)) ** 1.5  # (3/8)^{3/2}
    assert r.value == pytest.approx(want, rel=1e-9)


def test_laplace_of_j_squared_gives_bessel_kernel():
    # int e^{-xt} J_mu^2(sqrt t) dt = (1/x) e^{-1/(2x)} I_mu(1/(2x))
    mu, x = 1.0, 0.8
    f = lambda t: sp.jv(mu, np.sqrt(t)) ** 2
    spec = OscSpec(sqrt_frequencies=(1.0, 1.0), endpoint_exponent=mu)
    r = integrate_oscillatory(
        lambda t: np.exp(-x * t) * f(t), spec, tol=1e-10)
    want = np.exp(-0.5 / x) * sp.iv(mu, 0.5 / x) / x
    assert r.value == pytest.approx(want, rel=1e-8)


def test_laplace_rejects_nonpositive_x():
    with pytest.raises(DomainError):
        numeric_laplace(lambda t: np.exp(-t), 0.0)


# ----------------------------------------------------------------------
# acceleration
# ----------------------------------------------------------------------

def _log2_partial_sums(n):
    terms = (-1.0) ** np.arange(n) / np.arange(1.0, n + 1.0)
    return np.cumsum(terms), terms


def test_levin_u_on_alternating_series():
    s, terms = _log2_partial_sums(12)
    col = levin_u(s, terms)
    assert col[-1] == pytest.approx(np.log(2.0), abs=1e-12)


def test_wynn_epsilon_on_alternating_series():
    s, _ = _log2_partial_sums(16)
    est, err = wynn_epsilon(s)
    assert est == pytest.approx(np.log(2.0), abs=1e-10)
    assert abs(est - np.log(2.0)) <= 10.0 * err


def test_iterated_average_on_alternating_series():
    s, _ = _log2_partial_sums(20)
    est, err = iterated_average(s)
    assert est == pytest.approx(np.log(2.0), abs=1e-9)


@given(st.floats(0.3, 3.0), st.floats(0.5, 4.0))
@settings(max_examples=25, deadline=None)
def test_laplace_of_exponential_property(a, x):
    r = numeric_laplace(lambda t: np.exp(-a * t), x)
    assert r.value == pytest.approx(1.0 / (x + a), rel=1e-9)


# ----------------------------------------------------------------------
# error-estimate honesty battery
# ----------------------------------------------------------------------

def _battery():
    """(run, true_value) pairs with closed forms across all engines."""
    cases = []

    def fin(f, a, b, want, tol=1e-10):
        cases.append((lambda: integrate_finite(f, a, b, tol=tol), want))

    def ts(f, a, b, want, tol=1e-12):
        cases.append((lambda: tanh_sinh_finite(f, a, b, tol=tol), want))

    def sd(f, want, tol=1e-11):
        cases.append((lambda: integrate_singular_decay(f, tol=tol), want))

    def osc(f, freqs, want, tol=1e-8, p=0.0):
        spec = OscSpec(sqrt_frequencies=freqs, endpoint_exponent=p)
        cases.append((lambda: integrate_oscillatory(f, spec, tol=tol), want))

    fin(lambda x: x ** 3, 0.0, 1.0, 0.25)
    fin(np.cos, 0.0, 1.0, np.sin(1.0))
    fin(lambda x: np.exp(-x * x), -3.0, 3.0, np.sqrt(np.pi) * sp.erf(3.0))
    fin(lambda x: 1.0 / (1.0 + x * x), 0.0, 1.0, np.pi / 4.0)
    fin(lambda x: np.log1p(x), 0.0, 1.0, 2.0 * np.log(2.0) - 1.0)
    ts(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, 2.0)
    ts(lambda x: np.log(x), 0.0, 1.0, -1.0)
    ts(lambda x: x ** (-0.25) * (1 - x) ** (-0.25), 0.0, 1.0,
       float(sp.beta(0.75, 0.75)))
    sd(lambda t: np.exp(-t), 1.0)
    sd(lambda t: np.exp(-t) * np.sqrt(t), float(sp.gamma(1.5)))
    sd(lambda t: np.exp(-2.0 * t) / np.sqrt(t), np.sqrt(np.pi / 2.0))
    sd(lambda t: 1.0 / (1.0 + t) ** 1.5, 2.0)
    sd(lambda t: t / (1.0 + t ** 3), 2.0 * np.pi / (3.0 * np.sqrt(3.0)))
    osc(lambda t: sp.j0(np.sqrt(t)) ** 2 / (1.0 + t), (1.0, 1.0),
        2.0 * sp.iv(0, 1.0) * sp.kv(0, 1.0))
    osc(lambda t: sp.jv(1.0, np.sqrt(t)) ** 2 / (2.0 + t), (1.0, 1.0),
        2.0 * sp.iv(1, np.sqrt(2.0)) * sp.kv(1, np.sqrt(2.0)), p=1.0)
    osc(lambda t: np.cos(np.sqrt(t)) / (2.0 * np.sqrt(t) * (1.0 + t)),
        (1.0,), np.pi / (2.0 * np.e), p=-0.5)
    osc(lambda t: np.exp(-t) * sp.j0(np.sqrt(t)) ** 2, (1.0, 1.0),
        np.exp(-0.5) * sp.iv(0, 0.5))
    osc(lambda t: sp.j0(2.0 * np.sqrt(t)) ** 2 / (1.0 + t), (2.0, 2.0),
        2.0 * sp.iv(0, 2.0) * sp.kv(0, 2.0))
    sd(lambda t: np.exp(-t) * np.cos(t), 0.5)
    fin(lambda x: np.abs(x - 0.3) ** 0.5, 0.0, 1.0,
        (0.3 ** 1.5 + 0.7 ** 1.5) / 1.5, tol=1e-9)
    return cases


def test_error_estimate_honesty():
    honest = total = 0
    for run, want in _battery():
        r = run()
        total += 1
        if abs(r.value - want) <= 10.0 * max(r.err_estimate, 1e-15):
            honest += 1
    assert honest / total >= 0.95, f"only {honest}/{total} honest"
