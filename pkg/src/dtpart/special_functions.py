"""Real dilogarithm and small numeric helpers.

``li2`` uses the power series on [-1/2, 1/2] and maps every other real
argument in (-inf, 1] into that disc with the standard functional equations:

    Li2(x) = pi^2/6 - log(x) log(1-x) - Li2(1-x)       (reflection)
    Li2(x) = -Li2(x/(x-1)) - log(1-x)^2 / 2            (Landen)
    Li2(x) = -pi^2/6 - log(-x)^2 / 2 - Li2(1/x)        (inversion, x < -1)
"""
from fractions import Fraction
import math

from .errors import DomainError

PI2_6 = math.pi ** 2 / 6.0
PI2_12 = math.pi ** 2 / 12.0

# integers closer than this are treated as exact
SNAP_TOL = 1e-9


def _li2_series(x):
    # |x| <= 1/2: terms drop at least like 2^-k / k^2
    total = 0.0
    term = x
    k = 1
    while True:
        contrib = term / (k * k)
        total += contrib
        if abs(contrib) <= 1e-17 * abs(total):
            return total
        k += 1
        term *= x


def li2(x):
    """Real dilogarithm Li2(x) = -int_0^x log(1-w)/w dw for x <= 1."""
    x = float(x)
    if math.isnan(x) or x > 1.0:
        raise DomainError(f"li2 is defined here only for x <= 1, got {x!r}")
    if x == 1.0:
        return PI2_6
    if x == 0.0:
        return 0.0
    if -0.5 <= x <= 0.5:
        return _li2_series(x)
    if x > 0.5:
        return PI2_6 - math.log(x) * math.log1p(-x) - _li2_series(1.0 - x)
    if x >= -1.0:
        # x/(x-1) lies in (1/3, 1/2]
        return -_li2_series(x / (x - 1.0)) - 0.5 * math.log1p(-x) ** 2
    lx = math.log(-x)
    return -PI2_6 - 0.5 * lx * lx - li2(1.0 / x)


def log1pexp(z):
    """log(1 + e^z) without overflow for large positive z."""
    if z > 0:
        return z + math.log1p(math.exp(-z))
    return math.log1p(math.exp(z))


def frac_part(alpha, tol=SNAP_TOL):
    """Fractional part alpha - floor(alpha), snapped to 0 near integers.

    Fractions are handled exactly and never snapped.
    """
    if isinstance(alpha, (int, Fraction)):
        return float(alpha - math.floor(alpha))
    alpha = float(alpha)
    nearest = round(alpha)
    if abs(alpha - nearest) <= tol:
        return 0.0
    return alpha - math.floor(alpha)


def as_exact_t(t):
    """Return ``t`` as a Fraction when it is rational input, else None.

    Accepts ints, Fractions and strings like ``"5/2"`` or ``"3"``.  Floats are
    deliberately left on the snapping path.
    """
    if isinstance(t, bool):
        raise TypeError("t must be numeric")
    if isinstance(t, int):
        return Fraction(t)
    if isinstance(t, Fraction):
        return t
    if isinstance(t, str):
        try:
            return Fraction(t.strip())
        except ValueError:
            return None
    return None


def floor_and_frac(t, n):
    """Return (floor(t*sqrt(n)), {t*sqrt(n)}) for t > 0 and integer n >= 0.

    Rational ``t = p/q`` is handled with integer square roots so perfect
    squares give a fractional part of exactly 0.  Float ``t`` goes through
    the snapping rule of :func:`frac_part`.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    exact = as_exact_t(t)
    if exact is not None:
        p, q = exact.numerator, exact.denominator
        if p < 0:
            raise DomainError("t must be positive")
        # floor(sqrt(y)) == floor(sqrt(floor(y)))
        L = math.isqrt(p * p * n // (q * q))
        if q * q * L * L == p * p * n:
            return L, 0.0
        bits = 60
        scaled = math.isqrt((p * p * n << (2 * bits)) // (q * q))
        return L, (scaled - (L << bits)) / float(1 << bits)
    y = float(t) * math.sqrt(n)
    nearest = round(y)
    if abs(y - nearest) <= SNAP_TOL:
        return int(nearest), 0.0
    L = math.floor(y)
    return int(L), y - L


def int_log(m):
    """Natural log of a positive (arbitrarily large) integer.

    Uses the top 64 bits plus the bit length, so the result carries ~15
    significant digits regardless of size.
    """
    if m <= 0:
        raise DomainError("int_log needs a positive integer")
    bits = m.bit_length()
    if bits <= 64:
        return math.log(m)
    shift = bits - 64
    return math.log(m >> shift) + shift * math.log(2.0)
