"""Boltzmann measure on distinct-parts partitions with parts <= t sqrt(n).

Under P_x(lambda) = x^{|lambda|} / D(x) each part k <= L appears
independently with probability p_k = x^k / (1 + x^k), where
x = exp(-beta(t) / sqrt(n)).  N = sum k X_k is the partition size.
"""
from dataclasses import dataclass
import math

import numpy as np
from scipy.special import expit

from .beta_solver import solve_beta
from .errors import DomainError
from .exact_count import Partition, build_table, d_t, log_D
from .special_functions import floor_and_frac, int_log

SAMPLE_CHUNK = 4096


@dataclass(frozen=True, eq=False)
class BoltzmannModel:
    t: object
    n: int
    L: int
    beta: float
    x: float
    p: np.ndarray
    mean_N: float
    var_N: float

    @property
    def sigma(self):
        return math.sqrt(self.var_N)

    @property
    def parts(self):
        return np.arange(1, self.L + 1, dtype=float)

    @property
    def log_x(self):
        return -self.beta / math.sqrt(self.n)

    @property
    def total_mass(self):
        return self.L * (self.L + 1) // 2


@dataclass(frozen=True)
class SampleStats:
    count: int
    mean: float
    variance: float
    hits_at_n: int
    third_moment: float
    fourth_moment: float
    part_frequencies: np.ndarray = None


def build_model(t, n):
    """Tilted measure at x = exp(-beta(t)/sqrt(n))."""
    if n < 1:
        raise DomainError("n must be >= 1")
    sol = solve_beta(t)
    L = floor_and_frac(t, n)[0]
    k = np.arange(1, L + 1, dtype=float)
    # x^k/(1+x^k) = 1/(1+e^{beta k/sqrt n})
    p = expit(-sol.beta * k / math.sqrt(n))
    mean = math.fsum(k * p)
    var = math.fsum(k * k * p * (1.0 - p))
    return BoltzmannModel(t=t, n=n, L=L, beta=sol.beta,
                          x=math.exp(-sol.beta / math.sqrt(n)), p=p,
                          mean_N=mean, var_N=var)


def variance_asymptotic(t, n):
    """Leading term t / ((1 + e^{beta t}) beta'(t)) * n^{3/2} of Var(N)."""
    sol = solve_beta(t)
    c = sol.t / ((1.0 + math.exp(sol.beta * sol.t)) * sol.beta_prime)
    return c * n ** 1.5


def variance_constant(t):
    return variance_asymptotic(t, 1)


def cumulants(model):
    """Exact first four cumulants of N."""
    k = model.parts
    p = model.p
    q = p * (1.0 - p)
    return (math.fsum(k * p), math.fsum(k ** 2 * q),
            math.fsum(k ** 3 * q * (1.0 - 2.0 * p)),
            math.fsum(k ** 4 * q * (1.0 - 6.0 * q)))


def parts_from_uniforms(p, u):
    """Include part k exactly when u[k-1] < p[k-1]; return the partition."""
    keep = np.flatnonzero(np.asarray(u) < p) + 1
    return Partition(tuple(int(k) for k in keep[::-1]))


def _rng(seed):
    # PCG64 stream; one uniform per part, parts visited in order 1..L
    return np.random.Generator(np.random.PCG64(seed))


def sample(model, seed):
    """One Boltzmann partition, deterministic in ``seed``."""
    u = _rng(seed).random(model.L)
    return parts_from_uniforms(model.p, u)


def sample_exact_size(model, seed, max_tries=10 ** 7):
    """Rejection sampler: draw until |lambda| = n.

    Returns (partition, tries).  Expected tries are 1/P(N=n).
    """
    rng = _rng(seed)
    k = np.arange(1, model.L + 1)
    tries = 0
    while tries < max_tries:
        block = rng.random((SAMPLE_CHUNK, model.L)) < model.p
        sizes = block @ k
        hit = np.flatnonzero(sizes == model.n)
        if hit.size:
            tries += int(hit[0]) + 1
            row = block[hit[0]]
            return Partition(tuple(int(j) for j in k[row][::-1])), tries
        tries += SAMPLE_CHUNK
    raise RuntimeError(f"no exact-size sample in {max_tries} tries")


def sample_sizes(model, count, seed):
    """Sizes of ``count`` independent samples plus per-part hit counts."""
    rng = _rng(seed)
    k = np.arange(1, model.L + 1)
    sizes = np.empty(count, dtype=np.int64)
    hits = np.zeros(model.L, dtype=np.int64)
    done = 0
    while done < count:
        m = min(SAMPLE_CHUNK, count - done)
        block = rng.random((m, model.L)) < model.p
        sizes[done:done + m] = block @ k
        hits += block.sum(axis=0)
        done += m
    return sizes, hits


def sample_stats(model, count, seed):
    """Empirical summary of ``count`` samples of N."""
    sizes, hits = sample_sizes(model, count, seed)
    s = sizes.astype(float)
    mean = s.mean()
    c = s - mean
    return SampleStats(count=count, mean=mean, variance=float(c.var()),
                       hits_at_n=int(np.count_nonzero(sizes == model.n)),
                       third_moment=float(np.mean(c ** 3)),
                       fourth_moment=float(np.mean(c ** 4)),
                       part_frequencies=hits / count)


def log_prob_N_exact(model, count=None):
    """log P(N = n) = log d_t(n) - beta sqrt(n) - log D(x)."""
    if count is None:
        count = d_t(model.n, model.t)
    if count == 0:
        return -math.inf
    return (int_log(count) - model.beta * math.sqrt(model.n)
            - log_D(model.t, model.n, model.beta))


def prob_N_exact(model, count=None):
    """P(N = n), with d_t(n) taken from the exact big-integer count."""
    return math.exp(log_prob_N_exact(model, count))


def size_distribution(model, table=None):
    """P(N = m) for m = 0..L(L+1)/2 from the exact coefficient table."""
    if table is None:
        table = build_table(model.L, model.total_mass)
    m = np.arange(len(table), dtype=float)
    log_norm = log_D(model.t, model.n, model.beta)
    with np.errstate(divide="ignore"):
        logs = table.log_counts() + m * model.log_x - log_norm
    return np.exp(logs)
