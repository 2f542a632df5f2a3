"""Sequence acceleration for slowly convergent partial sums."""

from __future__ import annotations

from math import comb

import numpy as np


def levin_u(s, terms, beta: float = 1.0) -> np.ndarray:
    """Levin u-transformation estimates of the limit of partial sums.

    s[j] are partial sums, terms[j] the increments s[j] - s[j-1]
    (terms[0] = s[0]).  Returns the table column L_k for k = 0..n-1;
    successive entries converge rapidly when the remainder behaves like
    omega_j * (algebraic series in 1/j), omega_j = (beta + j) terms[j].
    """
    s = np.asarray(s, dtype=float)
    terms = np.asarray(terms, dtype=float)
    n = s.size
    out = np.full(n, np.nan)
    omega = (beta + np.arange(n)) * terms
    omega = np.where(omega == 0.0, 1e-300, omega)
    inv_w = 1.0 / omega
    for k in range(n):
        num = 0.0
        den = 0.0
        for j in range(k + 1):
            ratio = (beta + j) / (beta + k)
            w = (-1.0) ** j * comb(k, j) * ratio ** max(k - 1, 0) * inv_w[j]
            num += w * s[j]
            den += w
        out[k] = num / den if den != 0.0 else np.nan
    return out


def wynn_epsilon(s: np.ndarray) -> tuple[float, float]:
    """Wynn's epsilon algorithm on a sequence of partial sums.

    Returns (estimate, error_estimate); robust to vanishing differences.
    """
    s = np.asarray(s, dtype=float)
    n = s.size
    if n == 0:
        return np.nan, np.inf
    if n == 1:
        return float(s[0]), np.inf
    prev = np.zeros(n + 1)
    cur = s.copy()
    best = float(s[-1])
    best_err = abs(s[-1] - s[-2])
    for k in range(1, n):
        diff = cur[1: n - k + 1] - cur[: n - k]
        with np.errstate(divide="ignore", invalid="ignore"):
            nxt = prev[1: n - k + 1] + 1.0 / diff
        prev = cur
        cur = nxt
        if k % 2 == 0 and cur.size >= 2 and np.all(np.isfinite(cur[-2:])):
            err = abs(cur[-1] - cur[-2])
            if err < best_err:
                best, best_err = float(cur[-1]), err
    return best, best_err


def iterated_average(s: np.ndarray, depth: int = 12) -> tuple[float, float]:
    """Repeated pairwise averaging of partial sums (Euler-family).

    Effective for eventually alternating cell sums; returns the deepest
    estimate with the last cross-depth difference as error estimate.
    """
    s = np.asarray(s, dtype=float)
    best = float(s[-1])
    best_err = np.inf
    cur = s
    for _ in range(min(depth, s.size - 1)):
        cur = 0.5 * (cur[1:] + cur[:-1])
        err = abs(cur[-1] - best)
        if err < best_err:
            best_err = err
        best = float(cur[-1])
    return best, best_err
