"""Bernoulli numbers, Bernoulli polynomials and their 1-periodic extensions.

Numbers are kept as exact ``Fraction`` objects and converted to floats only
when a polynomial is evaluated. The table is built once at import time and is
read-only afterwards, so every function here is safe to call from threads.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import RangeError

K_MAX = 32

# sup |B3(x - floor(x))|; the exact value 1/(12*sqrt(3)) = 0.04811252... sits just below it
B3_MAX = 0.0481126


def _build_table(k_max: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, which gives B_1 = -1/2
    table = [Fraction(1)]
    for k in range(1, k_max + 1):
        acc = sum(math.comb(k + 1, j) * table[j] for j in range(k))
        table.append(-acc / (k + 1))
    return tuple(table)


_NUMBERS = _build_table(K_MAX)


def _check_index(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise RangeError(f"Bernoulli index must be an integer, got {k!r}")
    k = int(k)
    if not 0 <= k <= K_MAX:
        raise RangeError(f"Bernoulli index {k} outside supported range 0..{K_MAX}")
    return k


def bernoulli_number(k: int) -> Fraction:
    """Return the exact Bernoulli number B_k (B_1 = -1/2)."""
    return _NUMBERS[_check_index(k)]


def poly_coeffs(k: int) -> tuple[Fraction, ...]:
    """Coefficients of B_k(x), lowest degree first.

    >>> poly_coeffs(2)
    (Fraction(1, 6), Fraction(-1, 1), Fraction(1, 1))
    """
    k = _check_index(k)
    return tuple(math.comb(k, i) * _NUMBERS[k - i] for i in range(k + 1))


_FLOAT_COEFFS = tuple(tuple(float(c) for c in poly_coeffs(k)) for k in range(K_MAX + 1))


def bernoulli_poly(k: int, x):
    """Evaluate B_k(x) by Horner's rule. ``x`` may be a float or an ndarray."""
    coeffs = _FLOAT_COEFFS[_check_index(k)]
    acc = coeffs[-1] * np.ones_like(x, dtype=float) if isinstance(x, np.ndarray) else coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def periodic_bernoulli(k: int, x):
    """B_k(x - floor(x)), the 1-periodic extension used in Euler-Maclaurin remainders."""
    # tiny negative x rounds x - floor(x) up to exactly 1.0; keep frac in [0, 1)
    if isinstance(x, np.ndarray):
        frac = x - np.floor(x)
        frac[frac >= 1.0] = 0.0
    else:
        frac = x - math.floor(x)
        if frac >= 1.0:
            frac = 0.0
    return bernoulli_poly(k, frac)


def b3_max() -> float:
    return B3_MAX


def sampled_sup(k: int, samples: int = 10**6) -> float:
    """Max of |B_k| over ``samples`` equispaced points of [0, 1)."""
    x = np.arange(samples, dtype=float) / samples
    return float(np.max(np.abs(bernoulli_poly(k, x))))
