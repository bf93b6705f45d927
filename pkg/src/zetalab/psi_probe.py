"""The probe functions phi(N, s) and psi(N, s) = N**s phi(N, s).

phi(N, s) = sum_{n<=N} [n**-s - n**-(1-conj s)] - N**(1-s)/(1-s) + N**conj(s)/conj(s)

is the difference of two truncated zeta sums at s and at its reflection
1 - conj(s). On the critical line the two coincide and phi vanishes term by
term. Off the line this module splits phi with a first-order
Euler-Maclaurin step at a point j, bounds the remainder, and decomposes
N**s phi(N, s) against N**s phi(N/2, s) so each piece can be measured as N grows.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, fields

import numpy as np

from ._quad import composite_rule, unit_panel_edges
from .bernoulli import b3_max, periodic_bernoulli
from .errors import DomainError, RangeError
from .zeta_eval import LOG2, EMParams, as_point, cpow


def reflect(s: complex) -> complex:
    """1 - conj(s), built component-wise so that it equals s exactly when Re(s) = 1/2."""
    return complex(1.0 - s.real, s.imag)


def _check_poles(s: complex) -> None:
    if s == 1:
        raise DomainError("boundary term N**(1-s)/(1-s) has a pole at s = 1")
    if s == 0:
        raise DomainError("boundary term N**conj(s)/conj(s) has a pole at s = 0")


def _check_even(N: int, minimum: int = 2) -> None:
    if N < minimum or N % 2:
        raise DomainError(f"N must be an even integer >= {minimum}, got {N}")


def _check_x(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 1):
        raise DomainError("f is only used for x >= 1")
    return arr


def _rising(z: complex, k: int) -> complex:
    out = complex(1.0)
    for i in range(k):
        out *= z + i
    return out


def f_eval(x, s):
    """f(x) = x**-s - x**-(1 - conj s)."""
    s = as_point(s)
    arr = _check_x(x)
    ln = np.log(arr)
    out = np.exp(-s * ln) - np.exp(-reflect(s) * ln)
    return complex(out) if out.ndim == 0 else out


def f_derivative(x, s, order: int):
    """Closed-form derivative of ``f_eval`` of order 1, 2 or 3."""
    if order not in (1, 2, 3):
        raise RangeError(f"derivative order must be 1, 2 or 3, got {order}")
    s = as_point(s)
    a = reflect(s)
    arr = _check_x(x)
    ln = np.log(arr)
    sign = -1 if order % 2 else 1
    out = sign * (_rising(s, order) * np.exp(-(s + order) * ln)
                  - _rising(a, order) * np.exp(-(a + order) * ln))
    return complex(out) if out.ndim == 0 else out


def _head(s: complex, upto: int) -> complex:
    if upto < 1:
        return 0j
    ln = np.log(np.arange(1, upto + 1, dtype=float))
    terms = np.exp(-s * ln) - np.exp(-reflect(s) * ln)
    # compensated summation: psi multiplies phi by N**sigma, amplifying rounding
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def _antiderivative(x: int, s: complex) -> complex:
    # x**(1-s)/(1-s) - x**conj(s)/conj(s); note conj(s) = 1 - reflect(s)
    sb = 1 - reflect(s)
    return cpow(x, 1 - s) / (1 - s) - cpow(x, sb) / sb


def phi_direct(s, N: int) -> complex:
    s = as_point(s)
    _check_poles(s)
    _check_even(N)
    return _head(s, N) - _antiderivative(N, s)


def psi(s, N: int) -> complex:
    s = as_point(s)
    return cpow(N, s) * phi_direct(s, N)


@dataclass(frozen=True)
class PhiTerms:
    head_sum: complex
    integral_term: complex
    half_term: complex
    bernoulli_term: complex
    boundary_terms: complex
    remainder_E: complex

    def total(self) -> complex:
        return sum((getattr(self, f.name) for f in fields(self)), 0j)

    def without_remainder(self) -> complex:
        return self.total() - self.remainder_E


def _check_expansion(s: complex, p: EMParams) -> None:
    _check_poles(s)
    if p.m != 1:
        raise DomainError(f"the phi expansion is first order only (m=1), got m={p.m}")


def em_remainder(s, p: EMParams, quad_points: int = 16) -> complex:
    """E = (1/3!) int_j^N B3bar(x) f'''(x) dx, by Gauss-Legendre on unit panels."""
    s = as_point(s)
    _check_poles(s)
    if p.j == p.N:
        return 0j
    x, w = composite_rule(unit_panel_edges(p.j, p.N, abs(s.imag) + 3), quad_points)
    integrand = periodic_bernoulli(3, x) * f_derivative(x, s, 3)
    return complex(np.sum(w * integrand) / 6.0)


def phi_em(s, p: EMParams, quad_points: int = 16) -> PhiTerms:
    """Named terms of the m = 1 Euler-Maclaurin split of phi(N, s) at j = ``p.j``."""
    s = as_point(s)
    _check_expansion(s, p)
    N, j = p.N, p.j
    fN, fj = f_eval(N, s), f_eval(j, s)
    return PhiTerms(
        head_sum=_head(s, j - 1),
        integral_term=_antiderivative(N, s) - _antiderivative(j, s),
        half_term=0.5 * (fN + fj),
        bernoulli_term=(f_derivative(N, s, 1) - f_derivative(j, s, 1)) / 12.0,
        boundary_terms=-_antiderivative(N, s),
        remainder_E=em_remainder(s, p, quad_points),
    )


def em_remainder_bound(s, p: EMParams) -> float:
    """Closed-form bound on |E|, valid for 1/2 <= Re(s) < 1 where x**-(sigma+3) <= x**-(4-sigma)."""
    s = as_point(s)
    sigma = s.real
    if not 0.5 <= sigma < 1:
        raise DomainError(f"remainder bound needs 1/2 <= Re(s) < 1, got {s}")
    a = reflect(s)
    coeff = abs(_rising(s, 3)) + abs(_rising(a, 3))
    decay = p.j ** -(3 - sigma) - p.N ** -(3 - sigma)
    return b3_max() * coeff / (6 * (3 - sigma)) * decay


@dataclass(frozen=True)
class PsiDecomposition:
    """N**s phi(N, s) split at j = N/2; ``residual`` is whatever the named parts miss."""

    N: int
    total: complex
    recursive_part: complex
    constant_part: complex
    growth_part: complex
    twelfth_part: complex
    residual: complex

    @property
    def half_bracket(self) -> complex:
        """constant_part + growth_part, the full 1/2[...] bracket."""
        return self.constant_part + self.growth_part


def psi_decompose(s, N: int) -> PsiDecomposition:
    s = as_point(s)
    sigma = s.real
    if not 0.5 <= sigma < 1:
        raise DomainError(f"decomposition is set up for 1/2 <= Re(s) < 1, got {s}")
    _check_even(N, minimum=4)
    a = reflect(s)
    Ns = cpow(N, s)
    total = Ns * phi_direct(s, N)
    recursive = Ns * phi_direct(s, N // 2)
    constant = 0.5 * (1 - cpow(2.0, s))
    growth = 0.5 * (cpow(2.0, a) - 1) * N ** (2 * sigma - 1)
    # N**s/12 [f'(N) - f'(N/2)]; the N**(1-s) pieces become N**(2 sigma - 2)
    twelfth = ((cpow(2.0, s + 1) - 1) * s / N
               + (1 - cpow(2.0, a + 1)) * a * N ** (2 * sigma - 2)) / 12.0
    residual = total - (recursive + constant + growth + twelfth)
    return PsiDecomposition(N, total, recursive, constant, growth, twelfth, residual)


@dataclass(frozen=True)
class ContradictionSets:
    """Solutions of 2**(1 - conj s) = 1 (``first``) and 2**s = 1 (``second``)."""

    ks: tuple[int, ...]
    first: tuple[complex, ...]
    second: tuple[complex, ...]
    max_defect_first: float
    max_defect_second: float
    min_distance: float


def contradiction_sets(k_range) -> ContradictionSets:
    """Both lattices of solutions for k in ``k_range`` (an int K means -K..K)."""
    ks = tuple(range(-k_range, k_range + 1)) if isinstance(k_range, int) else tuple(k_range)
    if not ks:
        raise DomainError("empty k range")
    step = 2 * math.pi / LOG2
    # conj(s) = 1 + 2 pi k i / log 2  and  s = -2 pi k i / log 2
    first = tuple(complex(1.0, -step * k) for k in ks)
    second = tuple(complex(0.0, -step * k) for k in ks)
    defect_first = max(abs(cpow(2.0, reflect(s)) - 1) for s in first)
    defect_second = max(abs(cpow(2.0, s) - 1) for s in second)
    a = np.array(first)[:, None]
    b = np.array(second)[None, :]
    min_distance = float(np.min(np.abs(a - b)))
    return ContradictionSets(ks, first, second, defect_first, defect_second, min_distance)


def decomposition_slope(s, Ns) -> float:
    """Least-squares slope of log2|residual| against log2 N."""
    Ns = list(Ns)
    r = [abs(psi_decompose(s, N).residual) for N in Ns]
    return float(np.polyfit(np.log2(Ns), np.log2(r), 1)[0])
