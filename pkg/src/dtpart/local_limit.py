"""Characteristic function of the partition size N and what it implies.

phi(s) = E[e^{isN}] = prod_k (1 + p_k (e^{isk} - 1)).  Each factor is
accumulated as a log: the modulus through

    |1 + p (e^{i theta} - 1)|^2 = 1 - 4 p (1 - p) sin^2(theta / 2)

and the phase through atan2, so nothing underflows for large L and the
small-s behaviour keeps full relative precision.  The product is recovered
by a single exponential; summing principal logs is exact for that purpose.
"""
import math

import numpy as np
from scipy.special import ndtr

from .beta_solver import solve_beta
from .boltzmann import size_distribution
from .errors import BudgetExceeded

FOURIER_BUDGET = 2 * 10 ** 6
_CHUNK_ENTRIES = 2 ** 22


def _log_factors(p, k, s):
    theta = np.multiply.outer(s, k)
    half = np.sin(0.5 * theta)
    a = 4.0 * p * (1.0 - p) * half * half
    with np.errstate(divide="ignore"):
        re = 0.5 * np.log1p(-a)
    im = np.arctan2(p * np.sin(theta), 1.0 - 2.0 * p * half * half)
    return re, im


def log_char_fn(model, s):
    """log phi(s) for an array of s (real part may be -inf)."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    k = model.parts
    rows = max(1, _CHUNK_ENTRIES // max(1, model.L))
    out = np.empty(s.shape, dtype=complex)
    for i in range(0, s.size, rows):
        re, im = _log_factors(model.p, k, s[i:i + rows])
        out[i:i + rows] = re.sum(axis=1) + 1j * im.sum(axis=1)
    return out


def log_abs_char_fn(model, s):
    s = np.atleast_1d(np.asarray(s, dtype=float))
    k = model.parts
    rows = max(1, _CHUNK_ENTRIES // max(1, model.L))
    out = np.empty(s.shape)
    for i in range(0, s.size, rows):
        theta = np.multiply.outer(s[i:i + rows], k)
        half = np.sin(0.5 * theta)
        with np.errstate(divide="ignore"):
            out[i:i + rows] = 0.5 * np.log1p(-4.0 * model.p * (1.0 - model.p)
                                             * half * half).sum(axis=1)
    return out


def char_fn(model, s):
    """phi(s) = E exp(i s N); scalar in, complex out (arrays map elementwise)."""
    val = np.exp(log_char_fn(model, s))
    return complex(val[0]) if np.ndim(s) == 0 else val


def centered_char_fn(model, u):
    """phi(u / sigma) e^{-i n u / sigma}, the characteristic function of (N-n)/sigma."""
    u = np.asarray(u, dtype=float)
    w = np.atleast_1d(u) / model.sigma
    val = np.exp(log_char_fn(model, w) - 1j * model.n * w)
    return complex(val[0]) if np.ndim(u) == 0 else val


def clt_pointwise_error(model, u):
    """|phi(u/sigma) e^{-inu/sigma} - e^{-u^2/2}|."""
    u = np.asarray(u, dtype=float)
    err = np.abs(centered_char_fn(model, np.atleast_1d(u)) - np.exp(-0.5 * np.atleast_1d(u) ** 2))
    return float(err[0]) if np.ndim(u) == 0 else err


def fourier_invert(model, budget=FOURIER_BUDGET, return_imag=False):
    """P(N = n) as the uniform-grid average of phi(s) e^{-ins}.

    phi(s) e^{-ins} is a trigonometric polynomial with frequencies in
    [-n, L(L+1)/2 - n], so averaging over M = L(L+1)/2 + 1 equally spaced
    points isolates the constant term exactly.
    """
    M = model.total_mass + 1
    if M > budget:
        raise BudgetExceeded(f"Fourier grid of {M} points exceeds budget {budget}")
    j = np.arange(M, dtype=float)
    s = 2.0 * math.pi * j / M
    # reduce n*s mod 2pi exactly in integers before scaling
    phase = 2.0 * math.pi * ((model.n * np.arange(M, dtype=np.int64)) % M) / M
    vals = np.exp(log_char_fn(model, s) - 1j * phase)
    avg = vals.mean()
    if return_imag:
        return avg.real, avg.imag
    return avg.real


def gaussian_domination_profile(model, v_grid):
    """log|phi(v/sqrt n)| / (sqrt(n) v^2) for each nonzero v."""
    v = np.asarray(v_grid, dtype=float)
    if np.any(v == 0):
        raise ValueError("v_grid must not contain 0")
    r = math.sqrt(model.n)
    return log_abs_char_fn(model, v / r) / (r * v * v)


def domination_constant(t):
    """Small-v limit of the profile: -t / (2 (1 + e^{beta t}) beta'(t))."""
    sol = solve_beta(t)
    return -sol.t / (2.0 * (1.0 + math.exp(sol.beta * sol.t)) * sol.beta_prime)


def fit_domination(model, v_grid):
    """Largest A > 0 with log|phi(v/sqrt n)| <= -A sqrt(n) v^2 on the grid."""
    return -float(np.max(gaussian_domination_profile(model, v_grid)))


def tail_smallness(model, w_grid):
    """max over the grid of log|phi(w)| / sqrt(n)."""
    return float(np.max(log_abs_char_fn(model, w_grid))) / math.sqrt(model.n)


def exact_cdf(model, v, table=None):
    """P((N - n)/sigma <= v) from the exact size distribution."""
    pmf = size_distribution(model, table)
    cdf = np.cumsum(pmf)
    v = np.atleast_1d(np.asarray(v, dtype=float))
    idx = np.floor(model.n + v * model.sigma).astype(int)
    out = np.where(idx < 0, 0.0, cdf[np.clip(idx, 0, len(cdf) - 1)])
    return out


def cdf_deviation(model, v, table=None):
    """|exact CDF - standard normal CDF| at each v."""
    v = np.atleast_1d(np.asarray(v, dtype=float))
    return np.abs(exact_cdf(model, v, table) - ndtr(v))
