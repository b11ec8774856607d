from itertools import combinations
import math

import pytest


def subset_sum_counts(L, n_max):
    """Brute force: enumerate every subset of {1..L} and tally its sum."""
    counts = [0] * (n_max + 1)
    parts = range(1, L + 1)
    for r in range(L + 1):
        for combo in combinations(parts, r):
            s = sum(combo)
            if s <= n_max:
                counts[s] += 1
    return counts


def subset_sum_counts_bitmask(L, n_max):
    """Same tally via bitmasks over all 2^L subsets; used for larger L."""
    counts = [0] * (n_max + 1)
    sums = [0]
    for k in range(1, L + 1):
        sums = sums + [s + k for s in sums]
    for s in sums:
        if s <= n_max:
            counts[s] += 1
    return counts


def brute_measure(L, x, n):
    """P(N = n) by summing x^{|S|} over subsets S of {1..L}, normalised."""
    total = 0.0
    hit = 0.0
    for r in range(L + 1):
        for combo in combinations(range(1, L + 1), r):
            w = x ** sum(combo)
            total += w
            if sum(combo) == n:
                hit += w
    return hit / total


@pytest.fixture
def brute_counts():
    return subset_sum_counts


def distinct_partitions(m, cap=None):
    """Yield every partition of m into distinct parts <= cap, largest first."""
    cap = m if cap is None else min(cap, m)
    if m == 0:
        yield ()
        return
    for first in range(cap, 0, -1):
        if first * (first + 1) // 2 < m:
            break
        for rest in distinct_partitions(m - first, first - 1):
            yield (first,) + rest


def enumerated_counts(L, n_max):
    """counts[m] = number of distinct-parts partitions of m with largest part <= L."""
    return [sum(1 for p in distinct_partitions(m) if not p or p[0] <= L)
            for m in range(n_max + 1)]
