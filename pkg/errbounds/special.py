"""
Gaussian tail and first-order Marcum-Q.

Q1(a, b) is evaluated from its Neumann series in exponentially scaled modified
Bessel functions ive(k, ab) = I_k(ab) e^{-ab}:

    a < b:  Q1 = e^{-(b-a)^2/2} sum_{k>=0} (a/b)^k ive(k, ab)
    a > b:  Q1 = 1 - e^{-(a-b)^2/2} sum_{k>=1} (b/a)^k ive(k, ab)
    a = b:  Q1 = (1 + ive(0, a^2)) / 2

Truncation uses I_{k+1}(x)/I_k(x) <= x / (k + sqrt(k^2 + x^2)), which bounds the
remaining tail by a geometric series.
"""

import logging
import math

import numpy as np
from scipy import special, stats

logger = logging.getLogger(__name__)

SERIES_CHUNK = 64
MAX_SERIES_TERMS = 4096
RELATIVE_TAIL = 1e-15
# beyond this product ab the series needs O(ab) terms when a ~ b
LARGE_ARGUMENT = 1e4


def gaussian_q(x: float) -> float:
    """Standard normal tail Pr(Z > x)"""
    return float(special.ndtr(-x))


def _neumann_sum(ratio: float, x: float, start: int) -> float | None:
    """sum_{k>=start} ratio^k ive(k, x); None when the tail bound is not met in time"""
    total = 0.0
    k0 = start
    while k0 < MAX_SERIES_TERMS:
        ks = np.arange(k0, k0 + SERIES_CHUNK)
        with np.errstate(under="ignore"):
            terms = ratio ** ks * special.ive(ks, x)
        total += float(np.sum(terms))
        last_k = int(ks[-1])
        last = float(terms[-1])
        q = ratio * x / (last_k + math.sqrt(last_k * last_k + x * x))
        if q < 1.0:
            tail = last * q / (1.0 - q)
            if tail <= RELATIVE_TAIL * max(total, 1e-300) or last == 0.0:
                return total
        k0 += SERIES_CHUNK
    return None


def _large_argument(a: float, b: float) -> float:
    # Q1(a, b) is the survival function of a noncentral chi-square with 2 dof
    return float(stats.ncx2.sf(b * b, 2, a * a))


def marcum_q1(a: float, b: float) -> float:
    """First-order Marcum-Q function Q1(a, b) for a, b >= 0."""
    if a < 0.0 or b < 0.0 or math.isnan(a) or math.isnan(b):
        raise ValueError(f"marcum_q1 needs non-negative arguments, got ({a}, {b})")
    if b == 0.0:
        return 1.0
    if a == 0.0:
        return math.exp(-0.5 * b * b)

    x = a * b
    if x > LARGE_ARGUMENT:
        return min(1.0, max(0.0, _large_argument(a, b)))

    if a == b:
        value = 0.5 * (1.0 + float(special.ive(0, x)))
    elif a < b:
        series = _neumann_sum(a / b, x, 0)
        if series is None:
            logger.debug("Marcum-Q series did not settle at a=%g b=%g", a, b)
            value = _large_argument(a, b)
        else:
            value = math.exp(-0.5 * (b - a) ** 2) * series
    else:
        series = _neumann_sum(b / a, x, 1)
        if series is None:
            logger.debug("Marcum-Q series did not settle at a=%g b=%g", a, b)
            value = _large_argument(a, b)
        else:
            value = 1.0 - math.exp(-0.5 * (a - b) ** 2) * series
    return min(1.0, max(0.0, value))
