"""Asymptotic estimate of d_t(n) and its supporting expansions.

    d_t(n) ~ A_n(t) n^{-3/4} exp(B(t) sqrt(n))

Everything on the exponential scale stays in log space; ``estimate`` is
filled only when it fits in a float.
"""
from dataclasses import dataclass, replace
import math

import numpy as np
from scipy.special import expit

from .beta_solver import log_a_n, solve_beta
from .errors import BudgetExceeded, DomainError
from .exact_count import build_table, d_t, largest_part_bound, log_D
from .special_functions import floor_and_frac, int_log, log1pexp

HR_LOG_CONST = -math.log(4.0) - 0.25 * math.log(3.0)
HR_RATE = math.pi / math.sqrt(3.0)


@dataclass(frozen=True)
class AsymptoticEstimate:
    n: int
    t: float
    L: int
    log_estimate: float
    estimate: float
    frac_part: float
    ratio_to_exact: float = None
    log_exact: float = None
    exact_digits: int = None
    error: str = None


@dataclass(frozen=True)
class SaddleEval:
    y: float
    f_n_value: float
    f_n_prime: float


def _safe_exp(v):
    return math.exp(v) if v < 709.0 else math.inf


def log_estimate_dt(n, t):
    sol = solve_beta(t)
    return log_a_n(t, n) - 0.75 * math.log(n) + sol.B * math.sqrt(n)


def estimate_dt(n, t):
    """Leading-order estimate A_n(t) n^{-3/4} e^{B(t) sqrt n} for d_t(n)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    L, frac = floor_and_frac(t, n)
    log_est = log_estimate_dt(n, t)
    return AsymptoticEstimate(n=n, t=solve_beta(t).t, L=L, log_estimate=log_est,
                              estimate=_safe_exp(log_est), frac_part=frac)


def log_hardy_ramanujan_d(n):
    return HR_LOG_CONST - 0.75 * math.log(n) + HR_RATE * math.sqrt(n)


def hardy_ramanujan_d(n):
    """e^{pi sqrt(n/3)} / (4 * 3^{1/4} * n^{3/4})."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return _safe_exp(log_hardy_ramanujan_d(n))


def saddle_eval(t, n, y):
    """f_n(y) = y + log D(e^{-y/sqrt n}) / sqrt n and its y-derivative."""
    L = largest_part_bound(t, n)
    r = math.sqrt(n)
    k = np.arange(1, L + 1, dtype=float)
    # k x^k/(1+x^k) with x = e^{-y/sqrt n}
    mean = math.fsum(k * expit(-y * k / r))
    return SaddleEval(y=float(y), f_n_value=y + log_D(t, n, y) / r,
                      f_n_prime=1.0 - mean / n)


def log_saddle_bound(t, n):
    """log(x^{-n} D(x)) at x = e^{-beta/sqrt n}; an upper bound for log d_t(n)."""
    sol = solve_beta(t)
    return sol.beta * math.sqrt(n) + log_D(t, n, sol.beta)


def log_saddle_expansion(t, n):
    """B sqrt n + log sqrt((1+e^{-beta t})/2) - {t sqrt n} log(1+e^{-beta t})."""
    sol = solve_beta(t)
    frac = floor_and_frac(t, n)[1]
    c = log1pexp(-sol.beta * sol.t)
    return sol.B * math.sqrt(n) + 0.5 * (c - math.log(2.0)) - frac * c


def prop1_defect(t, n):
    """Direct log(x^{-n} D(x)) minus its three-term expansion; tends to 0."""
    return log_saddle_bound(t, n) - log_saddle_expansion(t, n)


def limit_shape(t, x):
    """f_t(x) = (1/beta) log((1 + e^{-beta x}) / (1 + e^{-beta t})) on [0, t]."""
    sol = solve_beta(t)
    tt = sol.t
    x = float(x)
    if not 0.0 <= x <= tt:
        raise DomainError(f"x must lie in [0, {tt}], got {x}")
    b = sol.beta
    if abs(b) * tt < 1e-3:
        # series in beta; the beta -> 0 limit is (t - x)/2
        return (0.5 * (tt - x) - b * (tt * tt - x * x) / 8.0
                + b ** 3 * (tt ** 4 - x ** 4) / 192.0)
    return (log1pexp(-b * x) - log1pexp(-b * tt)) / b


def limit_shape_curve(t, points):
    """(x, f_t(x)) at ``points`` equally spaced x in [0, t]."""
    tt = solve_beta(t).t
    xs = np.linspace(0.0, tt, points)
    xs[-1] = tt
    return [(float(x), limit_shape(t, x)) for x in xs]


def compare_sweep(t, n_list, budget=None):
    """Estimates for each n with exact counts attached where affordable."""
    out = []
    for n in n_list:
        est = estimate_dt(n, t)
        try:
            count = build_table(est.L, n, budget=budget)[n] if est.L >= 1 else 0
        except BudgetExceeded as exc:
            out.append(replace(est, error=str(exc)))
            continue
        if count == 0:
            out.append(replace(est, ratio_to_exact=0.0, exact_digits=1))
            continue
        log_exact = int_log(count)
        out.append(replace(est, log_exact=log_exact,
                           ratio_to_exact=math.exp(log_exact - est.log_estimate),
                           exact_digits=len(str(count))))
    return out


def exact_ratio(n, t):
    """d_t(n) / estimate, from the exact count."""
    return math.exp(int_log(d_t(n, t)) - log_estimate_dt(n, t))
