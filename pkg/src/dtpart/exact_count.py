"""Exact counts of distinct-parts partitions with a bounded largest part.

The generating polynomial prod_{k<=L} (1 + x^k) is built by the usual 0/1
knapsack recurrence ``c[m] += c[m-k]``.  The coefficient vector is packed
into a single Python integer with a fixed slot width, so each factor is one
shift-and-add over every m at once.  Slots never carry: every tracked
coefficient is at most min(2^L, p(n_max)) and p(m) < exp(pi sqrt(2m/3)).
"""
from dataclasses import dataclass
import math
import os

import numpy as np

from .errors import BudgetExceeded, DomainError
from .special_functions import floor_and_frac, int_log

DEFAULT_WORK_BUDGET = 2 ** 31
BUDGET_ENV = "DTPART_WORK_BUDGET"


def work_budget():
    """Current budget on coefficient updates (``n_max * L``)."""
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_WORK_BUDGET


@dataclass(frozen=True)
class CountTable:
    """Coefficients of prod_{k<=bound} (1 + x^k) up to x^n_max."""

    bound: int
    counts: tuple

    @property
    def n_max(self):
        return len(self.counts) - 1

    @property
    def total_mass(self):
        return self.bound * (self.bound + 1) // 2

    def __getitem__(self, m):
        return self.counts[m]

    def __len__(self):
        return len(self.counts)

    def log_counts(self):
        """Natural logs of the counts as a float array (-inf for zeros)."""
        out = np.full(len(self.counts), -np.inf)
        for m, c in enumerate(self.counts):
            if c:
                out[m] = int_log(c)
        return out


@dataclass(frozen=True)
class Partition:
    """A distinct-parts partition, parts stored in decreasing order."""

    parts: tuple

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise DomainError("parts must be strictly decreasing")
        if self.parts and self.parts[-1] <= 0:
            raise DomainError("parts must be positive")

    @property
    def size(self):
        return sum(self.parts)

    @property
    def largest(self):
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)


def _check_budget(L, n_max, budget):
    budget = work_budget() if budget is None else budget
    if L * n_max > budget:
        raise BudgetExceeded(
            f"table with L={L}, n_max={n_max} needs {L * n_max} updates, "
            f"budget is {budget}")


def build_table(L, n_max, budget=None):
    """Count subsets of {1..L} by sum, for every sum 0..n_max."""
    if L < 1:
        raise DomainError("L must be >= 1")
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    _check_budget(L, n_max, budget)

    # parts above n_max never reach a tracked coefficient
    top = min(L, n_max)
    bits = min(L + 1, int(math.pi * math.sqrt(2 * n_max / 3) / math.log(2)) + 2)
    width = 8 * ((bits + 7) // 8)
    size = n_max + 1
    mask = (1 << (size * width)) - 1
    packed = 1
    for k in range(1, top + 1):
        packed += (packed << (k * width)) & mask

    raw = packed.to_bytes(size * width // 8, "little")
    step = width // 8
    counts = tuple(int.from_bytes(raw[i:i + step], "little")
                   for i in range(0, len(raw), step))
    return CountTable(bound=L, counts=counts)


def build_table_listdp(L, n_max):
    """Plain list-based version of :func:`build_table` (slow; for checks)."""
    c = [0] * (n_max + 1)
    c[0] = 1
    for k in range(1, min(L, n_max) + 1):
        for m in range(n_max, k - 1, -1):
            c[m] += c[m - k]
    return CountTable(bound=L, counts=tuple(c))


def log_table_float(L, n_max):
    """Log-space float version of the table, for sweeps beyond big-int reach.

    Accurate to roughly 1e-12 relative per coefficient; never used where an
    exact value is needed.
    """
    c = np.full(n_max + 1, -np.inf)
    c[0] = 0.0
    for k in range(1, min(L, n_max) + 1):
        c[k:] = np.logaddexp(c[k:], c[:-k].copy())
    return c


def largest_part_bound(t, n):
    """floor(t * sqrt(n)), exact for rational t."""
    return floor_and_frac(t, n)[0]


def d_t(n, t, budget=None):
    """Number of distinct-parts partitions of n with largest part <= t*sqrt(n)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    L = largest_part_bound(t, n)
    if L < 1:
        return 0
    return build_table(L, n, budget=budget)[n]


def d_unrestricted(n, budget=None):
    """Number of partitions of n into distinct parts."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0:
        return 1
    return build_table(n, n, budget=budget)[n]


def log_D(t, n, y):
    """log prod_{k<=t sqrt n} (1 + e^{-y k / sqrt n}) by direct summation."""
    L = largest_part_bound(t, n)
    if L < 1:
        return 0.0
    k = np.arange(1, L + 1, dtype=float)
    z = -float(y) * k / math.sqrt(n)
    return math.fsum(np.logaddexp(0.0, z))

