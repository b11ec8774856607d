"""The tilt beta(t) and the constants B(t), A(t), A_n(t) built from it.

beta(t) is the unique root of

    g(beta) = int_0^t u / (1 + e^{beta u}) du = 1,

which is positive for t > 2, zero at t = 2 and negative on (sqrt 2, 2).
g is evaluated through the dilogarithm closed forms.  With z = |beta| t:

    beta > 0:  beta^2 g = Li2(1 - e^{-z}) - Li2(1 - e^{-2z}) / 2
    beta < 0:  beta^2 g = -pi^2/12 + z^2/2 + z log(1 + e^{-z}) - Li2(-e^{-z})

and by a Taylor series when |beta| t is small, where both closed forms
cancel catastrophically.
"""
from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np
from scipy.optimize import brentq

from .errors import ConvergenceError, DomainError
from .special_functions import PI2_12, as_exact_t, floor_and_frac, li2, log1pexp

T_MIN = math.sqrt(2.0) + 1e-3
BRACKET = (-50.0, 2.0)
MAX_ITER = 200
RESIDUAL_TOL = 1e-12
# |t - 2| below this uses the implicit-derivative form of beta'
CROSSOVER = 1e-4
SMALL_Z = 0.25

# int_0^z v/(1+e^v) dv = sum c_j z^j
_SMALL_Z_COEFFS = (
    (2, 1 / 4), (3, -1 / 12), (5, 1 / 240), (7, -1 / 3360),
    (9, 17 / 725760), (11, -31 / 15966720), (13, 691 / 4151347200),
    (15, -5461 / 373621248000),
)


def _moment_small(z):
    return math.fsum(c * z ** j for j, c in _SMALL_Z_COEFFS)


def scaled_moment(z):
    """F(z) = int_0^z v / (1 + e^v) dv for real z (either sign)."""
    if abs(z) <= SMALL_Z:
        return _moment_small(z)
    if z > 0:
        e = math.exp(-z)
        return li2(1.0 - e) - 0.5 * li2(1.0 - e * e)
    # F(-w) = int_0^w v/(1+e^{-v}) dv
    w = -z
    return -PI2_12 + 0.5 * w * w + w * math.log1p(math.exp(-w)) - li2(-math.exp(-w))


def defining_integral(beta, t):
    """g(beta) = int_0^t u/(1+e^{beta u}) du via the closed forms."""
    if beta == 0.0:
        return t * t / 4.0
    z = beta * t
    if abs(z) <= SMALL_Z:
        # F(z)/beta^2 with the z^2 factor cancelled analytically
        return t * t * math.fsum(c * z ** (j - 2) for j, c in _SMALL_Z_COEFFS)
    return scaled_moment(z) / (beta * beta)


def defining_integral_quad(beta, t, panels=10 ** 6):
    """Composite trapezoid rule for g(beta); independent of the dilogarithm."""
    u = np.linspace(0.0, t, panels + 1)
    # u/(1+e^{beta u}) written with expit-style stability
    f = u * np.exp(-np.logaddexp(0.0, beta * u))
    h = t / panels
    return h * (f.sum() - 0.5 * (f[0] + f[-1]))


def _second_moment(beta, t, nodes=80):
    """int_0^t u^2 e^{beta u} / (1 + e^{beta u})^2 du by Gauss-Legendre."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * t * (x + 1.0)
    bu = beta * u
    # e^a/(1+e^a)^2 = 1/(4 cosh^2(a/2))
    f = u * u / (4.0 * np.cosh(0.5 * bu) ** 2)
    return 0.5 * t * float(np.dot(w, f))


@dataclass(frozen=True)
class BetaSolution:
    t: float
    beta: float
    beta_prime: float
    B: float
    A: float
    residual: float
    iterations: int

    @property
    def gamma(self):
        """-beta, the positive parameter used when t < 2."""
        return -self.beta

    @property
    def oscillation_base(self):
        """1 + e^{-beta t}, raised to -{t sqrt n} inside A_n(t)."""
        return 1.0 + math.exp(-self.beta * self.t)


def _check_t(t):
    exact = as_exact_t(t)
    t = float(exact) if exact is not None else float(t)
    if not t >= T_MIN:
        raise DomainError(
            f"beta(t) is solved only for t >= sqrt(2) + 1e-3 = {T_MIN:.6f}, got {t}")
    return t


def _beta_prime(beta, t):
    if abs(t - 2.0) <= CROSSOVER:
        if t == 2.0:
            return 1.5
        # implicit differentiation of g(beta, t) = 1; no cancellation near beta = 0
        return t / (1.0 + math.exp(beta * t)) / _second_moment(beta, t)
    bt = beta * t
    return bt / (2.0 * (1.0 + math.exp(bt)) - t * t)


def _amplitude(beta, beta_prime, t):
    return math.cosh(0.5 * beta * t) * math.sqrt(beta_prime / (math.pi * t))


def amplitude_radical(beta, t):
    """A(t) in the form (1/2) sqrt(beta (1+e^{-beta t}) / (pi (2 - t^2/(1+e^{beta t}))))."""
    num = beta * (1.0 + math.exp(-beta * t))
    den = math.pi * (2.0 - t * t / (1.0 + math.exp(beta * t)))
    return 0.5 * math.sqrt(num / den)


@lru_cache(maxsize=4096)
def _solve(t):
    if t == 2.0:
        beta, iterations = 0.0, 0
    else:
        lo, hi = BRACKET
        try:
            beta, info = brentq(lambda b: defining_integral(b, t) - 1.0, lo, hi,
                                xtol=1e-16, rtol=4 * np.finfo(float).eps,
                                maxiter=MAX_ITER, full_output=True)
        except RuntimeError as exc:
            raise ConvergenceError(str(exc)) from exc
        iterations = info.iterations
    residual = abs(defining_integral(beta, t) - 1.0)
    if residual > RESIDUAL_TOL:
        raise ConvergenceError(f"residual {residual:.3e} at t={t}")
    bp = _beta_prime(beta, t)
    B = 2.0 * beta + t * log1pexp(-beta * t)
    A = _amplitude(beta, bp, t)
    if abs(t - 2.0) > CROSSOVER:
        other = amplitude_radical(beta, t)
        if abs(other - A) > 1e-10 * max(1.0, A):
            raise ConvergenceError(f"amplitude forms disagree at t={t}: {A} vs {other}")
    return BetaSolution(t=t, beta=beta, beta_prime=bp, B=B, A=A,
                        residual=residual, iterations=iterations)


def solve_beta(t):
    """Solve g(beta) = 1 and bundle beta, beta', B and A."""
    return _solve(_check_t(t))


def beta_prime(t):
    return solve_beta(t).beta_prime


def big_B(t):
    """Growth constant B(t) = 2 beta + t log(1 + e^{-beta t})."""
    return solve_beta(t).B


def amplitude(t):
    """Envelope A(t) of the amplitude, without the oscillating factor."""
    return solve_beta(t).A


def log_a_n(t, n):
    sol = solve_beta(t)
    frac = floor_and_frac(t, n)[1]
    return math.log(sol.A) - frac * log1pexp(-sol.beta * sol.t)


def a_n(t, n):
    """A_n(t) = A(t) (1 + e^{-beta t})^{-{t sqrt n}}."""
    return math.exp(log_a_n(t, n))
