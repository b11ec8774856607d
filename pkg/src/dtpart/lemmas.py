"""Numerical certificates for two auxiliary inequalities.

The first bounds the cubic Taylor remainder

    f_x(s) = log((1 + x e^{is}) / (1 + x)) - i s x/(1+x) + (s^2/2) x/(1+x)^2

by c x |s|^3 / (1-x)^3 with c = 134 (the proof gives 2/3 on |s| <= (1-x)/2
and 6 + 2*4^3 elsewhere).

The second bounds the Weyl-type sum f_n(alpha) = sum_{k<=n} ||k alpha||^2 below by n/768 on
[eps/n, 1/2].  f_n is a convex parabola between consecutive cusps
alpha = (2j+1)/(2k), so its minimum over an interval sits at a domain
endpoint or at a parabola vertex; :func:`lemma2_min` sweeps the cusps and
evaluates every candidate with the exact piecewise quadratic.
"""
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .errors import BudgetExceeded, DomainError

LEMMA1_CONSTANT = 134.0
SMALL_S_CONSTANT = 2.0 / 3.0
LEMMA2_CONSTANT = 1.0 / 768.0
LEMMA2_MAX_N = 2000


@dataclass(frozen=True)
class RemainderSample:
    x: float
    s: float
    f_abs: float
    bound_ratio: float


@dataclass(frozen=True)
class WeylSample:
    n: int
    alpha: float
    sum_value: float

    @property
    def normalized(self):
        return self.sum_value / self.n


def f_x(x, s):
    """Cubic remainder f_x(s); vectorised over x and s."""
    x = np.asarray(x, dtype=float)
    s = np.asarray(s, dtype=float)
    if np.any((x <= 0) | (x >= 1)):
        raise DomainError("f_x needs 0 < x < 1")
    r = x / (1.0 + x)
    half = np.sin(0.5 * s)
    # log(1 + r (e^{is} - 1)) with e^{is} - 1 = -2 sin^2(s/2) + i sin s
    a = -2.0 * r * half * half
    b = r * np.sin(s)
    log_mod = 0.5 * np.log1p(2.0 * a + a * a + b * b)
    arg = np.arctan2(b, 1.0 + a)
    out = (log_mod + 0.5 * s * s * x / (1.0 + x) ** 2) + 1j * (arg - s * r)
    return complex(out) if out.ndim == 0 else out


def remainder_ratio(x, s):
    """|f_x(s)| (1-x)^3 / (x |s|^3)."""
    x = np.asarray(x, dtype=float)
    s = np.asarray(s, dtype=float)
    return np.abs(f_x(x, s)) * (1.0 - x) ** 3 / (x * np.abs(s) ** 3)


def canonical_lemma1_grid():
    """x in {0.01, ..., 0.99}, s in +/- logspace(1e-4, pi, 200)."""
    xs = np.round(np.arange(1, 100) * 0.01, 2)
    pos = np.logspace(-4.0, math.log10(math.pi), 200)
    return xs, np.concatenate([-pos[::-1], pos])


def lemma1_max_ratio(x_grid, s_grid):
    """Max of the bound ratio over the product grid."""
    X, S = np.meshgrid(np.asarray(x_grid, float), np.asarray(s_grid, float), indexing="ij")
    if np.any(S == 0):
        raise DomainError("s grid must exclude 0")
    return float(np.max(remainder_ratio(X, S)))


def lemma1_small_s_max(x_grid, s_grid):
    """Max ratio restricted to |s| <= (1-x)/2, where the proof gives 2/3."""
    X, S = np.meshgrid(np.asarray(x_grid, float), np.asarray(s_grid, float), indexing="ij")
    mask = (np.abs(S) <= 0.5 * (1.0 - X)) & (S != 0)
    if not mask.any():
        return 0.0
    return float(np.max(remainder_ratio(X[mask], S[mask])))


def lemma1_samples(x_grid, s_grid):
    out = []
    for x in x_grid:
        for s in s_grid:
            f = abs(f_x(x, s))
            out.append(RemainderSample(x=float(x), s=float(s), f_abs=f,
                                       bound_ratio=f * (1 - x) ** 3 / (x * abs(s) ** 3)))
    return out


def dist_to_int(y):
    """||y||, distance to the nearest integer."""
    if isinstance(y, Fraction):
        fl = y - math.floor(y)
        return min(fl, 1 - fl)
    y = np.asarray(y, dtype=float)
    return np.abs(y - np.rint(y))


def weyl_sum(n, alpha):
    """f_n(alpha) = sum_{k<=n} ||k alpha||^2 (exact for Fraction alpha)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if isinstance(alpha, Fraction):
        return sum(dist_to_int(k * alpha) ** 2 for k in range(1, n + 1))
    k = np.arange(1, n + 1, dtype=float)
    d = dist_to_int(k * float(alpha))
    return math.fsum(d * d)


def weyl_sum_grid(n, alphas):
    """f_n at many points (dense-grid evaluation, chunked)."""
    alphas = np.asarray(alphas, dtype=float)
    k = np.arange(1, n + 1, dtype=float)
    out = np.empty(alphas.size)
    step = max(1, 2 ** 22 // n)
    for i in range(0, alphas.size, step):
        d = dist_to_int(np.multiply.outer(alphas[i:i + step], k))
        out[i:i + step] = (d * d).sum(axis=1)
    return out


def _cusps(n, lo):
    """Cusps (2j+1)/(2k) in (lo, 1/2], sorted; returns (values, k, j)."""
    vals, ks, js = [], [], []
    for k in range(1, n + 1):
        j = np.arange(0, (k + 1) // 2)
        c = (2 * j + 1) / (2.0 * k)
        keep = (c > lo) & (c <= 0.5)
        vals.append(c[keep])
        ks.append(np.full(keep.sum(), k))
        js.append(j[keep])
    vals = np.concatenate(vals)
    order = np.argsort(vals, kind="stable")
    return vals[order], np.concatenate(ks)[order], np.concatenate(js)[order]


def _piece_coefficients(n, lo):
    """Piecewise-quadratic description of f_n on [lo, 1/2].

    Returns (cuts, S1, S2) with f_n(alpha) = Q alpha^2 - 2 S1[i] alpha + S2[i]
    on piece i, where piece 0 starts at lo and piece i > 0 at cuts[i-1].
    """
    # ell_k = cusps of k at or left of lo, compared exactly as _cusps does
    ell = []
    for k in range(1, n + 1):
        j = np.arange(0, (k + 1) // 2)
        ell.append(int(np.count_nonzero((2 * j + 1) / (2.0 * k) <= lo)))
    s1 = sum(k * e for k, e in zip(range(1, n + 1), ell))
    s2 = sum(e * e for e in ell)
    cuts, cks, cjs = _cusps(n, lo)
    # crossing cusp (2j+1)/(2k) raises ell_k from j to j+1
    S1 = np.concatenate([[s1], s1 + np.cumsum(cks)]).astype(float)
    S2 = np.concatenate([[s2], s2 + np.cumsum(2 * cjs + 1)]).astype(float)
    return cuts, S1, S2


def lemma2_candidates(n, lo):
    """Candidate minimisers on [lo, 1/2]: endpoints, rationals a/b (b <= n)
    and the parabola vertex of every piece that contains it."""
    Q = n * (n + 1) * (2 * n + 1) / 6.0
    cuts, S1, S2 = _piece_coefficients(n, lo)
    left = np.concatenate([[lo], cuts])
    right = np.concatenate([cuts, [0.5]])
    vert = S1 / Q
    inside = (vert >= left) & (vert <= right)
    rats = []
    for b in range(1, n + 1):
        a = np.arange(math.ceil(lo * b), b // 2 + 1)
        rats.append(a / b)
    rats = np.concatenate(rats)
    rats = rats[(rats >= lo) & (rats <= 0.5)]
    return np.unique(np.concatenate([[lo, 0.5], rats, vert[inside]])), (cuts, S1, S2, Q)


def _eval_pieces(alpha, pieces):
    cuts, S1, S2, Q = pieces
    i = np.searchsorted(cuts, alpha, side="left")
    return Q * alpha * alpha - 2.0 * S1[i] * alpha + S2[i]


def lemma2_min(n, epsilon):
    """Minimise f_n over [epsilon/n, 1/2]; returns (alpha_min, value)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if not 0 < epsilon <= 0.5:
        raise DomainError("epsilon must lie in (0, 1/2]")
    if n > LEMMA2_MAX_N:
        raise BudgetExceeded(f"lemma2_min supports n <= {LEMMA2_MAX_N}")
    lo = epsilon / n
    cands, pieces = lemma2_candidates(n, lo)
    approx = _eval_pieces(cands, pieces)
    # re-evaluate the best few directly to shed cancellation in the quadratic form
    best = cands[np.argsort(approx)[:16]]
    vals = weyl_sum_grid(n, best)
    i = int(np.argmin(vals))
    return float(best[i]), float(vals[i])


def lemma2_min_dense(n, epsilon, points=10 ** 6, refine=True):
    """Dense uniform-grid minimum of f_n on [epsilon/n, 1/2] (oracle).

    With ``refine`` the best grid point and its two neighbours are fitted by
    a parabola; f_n is exactly quadratic between cusps, which are far wider
    apart than the grid step near the minimum.
    """
    grid = np.linspace(epsilon / n, 0.5, points)
    vals = weyl_sum_grid(n, grid)
    i = int(np.argmin(vals))
    if not refine or i == 0 or i == points - 1:
        return float(grid[i]), float(vals[i])
    h = grid[1] - grid[0]
    y0, y1, y2 = vals[i - 1], vals[i], vals[i + 1]
    curv = y0 - 2.0 * y1 + y2
    if curv <= 0:
        return float(grid[i]), float(vals[i])
    shift = 0.5 * h * (y0 - y2) / curv
    alpha = grid[i] + shift
    return float(alpha), weyl_sum(n, alpha)
