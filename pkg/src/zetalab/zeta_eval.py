"""Evaluators for zeta(s) and eta(s) near the critical strip.

Three routes are provided and meant to be cross-checked against each other:

* ``em_zeta``: Euler-Maclaurin expansion of the truncated Dirichlet series,
  valid for Re(s) > 1 - 2m.
* ``zeta_from_eta``: averaged partial sums of the alternating series,
  divided by 1 - 2**(1-s).
* ``integral_zeta``: the Fermi-Dirac type integral
  int_0^inf x**(s-1) / (e**x + 1) dx over (1 - 2**(1-s)) Gamma(s).

``tail_integral`` and ``tail_bound`` expose the floor-function remainder
s * int_N^inf (x - floor x) x**(-s-1) dx dropped by the truncated form.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ._quad import composite_rule, gauss_legendre, unit_panel_edges
from .bernoulli import K_MAX, bernoulli_number
from .errors import DomainError, NumericalFailure, PoleError, SingularityError
from .gamma import gamma

LOG2 = math.log(2.0)
M_MAX = 12
SINGULAR_TOL = 1e-9


class Method(str, enum.Enum):
    EM = "EM"
    ETA = "ETA"
    INTEGRAL = "INTEGRAL"
    PHI = "PHI"
    PSI = "PSI"


@dataclass(frozen=True)
class EMParams:
    """Euler-Maclaurin controls: cutoff ``N``, Bernoulli order ``m``, split point ``j``."""

    N: int
    m: int = 1
    j: int | None = None

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"N must be positive, got {self.N}")
        if not 1 <= self.m <= M_MAX:
            raise DomainError(f"m must lie in 1..{M_MAX}, got {self.m}")
        if self.j is None:
            object.__setattr__(self, "j", max(1, self.N // 2))
        if not 1 <= self.j <= self.N:
            raise DomainError(f"split point j={self.j} must satisfy 1 <= j <= N={self.N}")


@dataclass(frozen=True)
class EvalResult:
    value: complex
    method: Method
    error_bound: float
    rigorous: bool
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.error_bound >= 0:
            raise NumericalFailure(f"error bound must be non-negative, got {self.error_bound}")


def as_point(s) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError(f"point must be finite, got {s}")
    return s


def cpow(base: float, z: complex) -> complex:
    """base**z for real base > 0, as exp(z * ln base) to avoid branch-cut ambiguity."""
    return cmath.exp(z * math.log(base))


def _check_finite(value: complex, what: str) -> complex:
    if not cmath.isfinite(value):
        raise NumericalFailure(f"{what} produced a non-finite value")
    return value


def _check_not_excluded(s: complex) -> None:
    # zeros of 1 - 2**(1-s): s = 1 + 2 pi k i / log 2
    k = round(s.imag * LOG2 / (2 * math.pi))
    nearest = complex(1.0, 2 * math.pi * k / LOG2)
    if abs(s - nearest) < SINGULAR_TOL:
        raise SingularityError(f"s={s} is within {SINGULAR_TOL} of the excluded point {nearest}")


def _eta_factor(s: complex) -> complex:
    return 1 - cpow(2.0, 1 - s)


# ---------------------------------------------------------------------------
# Dirichlet eta
# ---------------------------------------------------------------------------

DEFAULT_ETA_TERMS = 10**6


def eta_series(s, terms: int = DEFAULT_ETA_TERMS) -> EvalResult:
    """Alternating-series estimate of eta(s), averaging the last two partial sums.

    The error bound is the size of the last term. For complex s the alternating
    envelope argument does not apply, so the bound is reported as heuristic.
    """
    s = as_point(s)
    if s.real <= 0:
        raise DomainError(f"eta series needs Re(s) > 0, got {s}")
    if terms < 4 or terms % 2:
        raise DomainError(f"terms must be even and >= 4, got {terms}")
    n = np.arange(1, terms + 1, dtype=float)
    a = np.exp(-s * np.log(n))
    a[1::2] = -a[1::2]
    total = np.sum(a)
    # mean of S_terms and S_{terms-1}
    value = complex(total - 0.5 * a[-1])
    _check_finite(value, "eta_series")
    return EvalResult(value, Method.ETA, float(abs(a[-1])), False, {"terms": terms})


def zeta_from_eta(s, terms: int = DEFAULT_ETA_TERMS) -> EvalResult:
    s = as_point(s)
    if s.real <= 0:
        raise DomainError(f"eta route needs Re(s) > 0, got {s}")
    _check_not_excluded(s)
    eta = eta_series(s, terms)
    factor = _eta_factor(s)
    value = _check_finite(eta.value / factor, "zeta_from_eta")
    return EvalResult(value, Method.ETA, eta.error_bound / abs(factor), False, {"terms": terms})


# ---------------------------------------------------------------------------
# Euler-Maclaurin
# ---------------------------------------------------------------------------

# B_{2i} / (2i)! for i = 1..M_MAX+1 (the extra one sizes the first omitted term)
_EM_COEFFS = tuple(
    float(bernoulli_number(2 * i) / math.factorial(2 * i)) for i in range(1, M_MAX + 2)
)
assert 2 * (M_MAX + 1) <= K_MAX


def default_em_params(s) -> EMParams:
    """N = max(50, 2 ceil|t|), m = 10; left of the imaginary axis N shrinks to 8.

    For Re(s) < 0 the head sum grows like N**(1-sigma) and cancels against the
    boundary term, so a large N only adds rounding error.
    """
    s = as_point(s)
    floor_N = 50 if s.real >= 0 else 8
    return EMParams(N=max(floor_N, 2 * math.ceil(abs(s.imag))), m=10)


EPS = float(np.finfo(float).eps)


def _em_terms(s: np.ndarray, N: int, m: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised EM zeta over an array of points.

    Returns (values, first omitted terms, magnitude scale for rounding error).
    """
    s = np.asarray(s, dtype=complex)
    lnN = math.log(N)
    if N > 1:
        ln_n = np.log(np.arange(1, N, dtype=float))
        powers = np.exp(-np.multiply.outer(s, ln_n))
        head = powers.sum(axis=-1)
        scale = np.abs(powers).sum(axis=-1)
    else:
        head = np.zeros_like(s)
        scale = np.zeros(s.shape)
    N_ms = np.exp(-s * lnN)
    boundary = N * N_ms / (s - 1)
    value = head + boundary + 0.5 * N_ms
    scale = scale + np.abs(boundary) * (1 + np.abs(s) * lnN)
    # rising product s (s+1) ... (s+2i-2), times N**(-s-2i+1)
    poch = s.copy()
    power = N_ms / N
    for i in range(1, m + 1):
        value = value + _EM_COEFFS[i - 1] * poch * power
        poch = poch * (s + 2 * i - 1) * (s + 2 * i)
        power = power / (N * N)
    omitted = _EM_COEFFS[m] * poch * power
    return value, omitted, scale


def em_zeta(s, p: EMParams | None = None) -> EvalResult:
    """Euler-Maclaurin evaluation of zeta(s).

    Uses sum_{n<N} n**-s + N**(1-s)/(s-1) + N**-s/2 + sum_i B_2i/(2i)! (s)_{2i-1} N**(-s-2i+1).
    The error bound is twice the first omitted correction plus a rounding
    allowance (heuristic).
    """
    s = as_point(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    p = p or default_em_params(s)
    if s.real <= 1 - 2 * p.m:
        raise DomainError(f"EM with m={p.m} needs Re(s) > {1 - 2 * p.m}, got {s}")
    value, omitted, scale = _em_terms(np.array(s), p.N, p.m)
    value = _check_finite(complex(value), "em_zeta")
    bound = 2.0 * float(abs(omitted)) + 4 * EPS * float(scale)
    return EvalResult(value, Method.EM, bound, False, {"N": p.N, "m": p.m})


def em_zeta_values(s: np.ndarray, N: int, m: int = 10, chunk: int = 256) -> np.ndarray:
    """Array version of ``em_zeta`` for grid scans (no per-point validation)."""
    s = np.asarray(s, dtype=complex)
    out = np.empty(s.shape, dtype=complex)
    flat_in, flat_out = s.ravel(), out.reshape(-1)
    for lo in range(0, flat_in.size, chunk):
        flat_out[lo:lo + chunk] = _em_terms(flat_in[lo:lo + chunk], N, m)[0]
    return out


# ---------------------------------------------------------------------------
# Integral representation
# ---------------------------------------------------------------------------

# 1/(e^x + 1) = 1/2 - sum_{n>=1} (2^{2n} - 1) B_{2n} x^{2n-1} / (2n)!, radius pi
_FERMI_SERIES = tuple(
    (2 * n - 1, -float((2 ** (2 * n) - 1) * bernoulli_number(2 * n) / math.factorial(2 * n)))
    for n in range(1, K_MAX // 2 + 1)
)
_FERMI_DEPTH = 40.0
_GL_ORDER = 16


def _ray_angle(t: float) -> float:
    # The integral is ~exp(-pi|t|/2) while the real-axis integrand is O(1);
    # tilting the ray towards +-i pi/2 keeps the cancellation factor near e^4.
    # Poles of 1/(e^x+1) sit on the imaginary axis, so the tilt stays below pi/2.
    if abs(t) <= 8 / math.pi:
        return 0.0
    return math.copysign(math.pi / 2 - 4 / abs(t), t)


def _ray_mesh(cos_theta: float, r_max: float, panels: int) -> np.ndarray:
    # panel width ~ distance to the nearest pole (r cos theta), capped at 1
    r_star = 1 / cos_theta
    u_log = math.log(min(r_star, r_max)) / cos_theta
    u_total = u_log + max(0.0, r_max - r_star)
    u = np.linspace(0.0, u_total, panels + 1)
    r = np.where(u <= u_log, np.exp(u * cos_theta), r_star + (u - u_log))
    r[-1] = r_max
    return r


def _fermi_integral(s: complex, panels: int) -> tuple[complex, float]:
    """The integral along a tilted ray, plus the sum of absolute contributions."""
    theta = _ray_angle(s.imag)
    omega = cmath.exp(1j * theta)
    cos_theta = math.cos(theta)
    # [0, omega]: termwise integration of the power series
    head = 0.5 * cmath.exp(1j * theta * s) / s
    scale = abs(head)
    for k, c in _FERMI_SERIES:
        term = c * cmath.exp(1j * theta * (s + k)) / (s + k)
        head += term
        scale += abs(term)
    # [omega, r_max omega]: composite Gauss-Legendre along the ray
    r_max = _FERMI_DEPTH / cos_theta
    r, w = composite_rule(_ray_mesh(cos_theta, r_max, panels), _GL_ORDER)
    log_x = np.log(r) + 1j * theta
    x = r * omega
    contrib = w * np.exp((s - 1) * log_x) / (np.exp(x) + 1.0)
    body = np.sum(contrib) * omega
    scale += float(np.sum(np.abs(contrib)))
    # beyond r_max: 1/(e^x+1) ~ e^-x, first two terms of the incomplete gamma asymptotics
    X = r_max * omega
    tail = cmath.exp((s - 1) * (math.log(r_max) + 1j * theta) - X) * (1 + (s - 1) / X)
    return complex(head + body + tail), scale


def integral_zeta(s, quad_points: int = 256) -> EvalResult:
    """zeta(s) from the integral of x**(s-1)/(e**x+1), valid for Re(s) > 0.

    ``quad_points`` is the number of 16-point Gauss-Legendre panels; the
    reported error is the change when the panel count is doubled.
    """
    s = as_point(s)
    if s.real <= 0:
        raise DomainError(f"integral route needs Re(s) > 0, got {s}")
    if quad_points < 64:
        raise DomainError(f"quad_points must be >= 64, got {quad_points}")
    _check_not_excluded(s)
    denom = _eta_factor(s) * gamma(s)
    if denom == 0 or not cmath.isfinite(denom):
        raise NumericalFailure(f"Gamma({s}) under/overflows in double precision")
    coarse, _ = _fermi_integral(s, quad_points)
    fine, scale = _fermi_integral(s, 2 * quad_points)
    value = _check_finite(fine / denom, "integral_zeta")
    # refinement change, rounding in the sum, ~1e-14 relative from the Lanczos Gamma
    err = (abs(fine - coarse) + 4 * EPS * scale) / abs(denom) + 1e-14 * abs(value)
    return EvalResult(value, Method.INTEGRAL, float(err), False, {"quad_points": quad_points})


# ---------------------------------------------------------------------------
# Floor-function tail
# ---------------------------------------------------------------------------

def tail_bound(s, N: int) -> float:
    """|s| / (sigma N**sigma), the crude bound on the floor-function tail."""
    s = as_point(s)
    if s.real <= 0:
        raise DomainError(f"tail bound needs Re(s) > 0, got {s}")
    return abs(s) / (s.real * N ** s.real)


def tail_integral(s, N: int, quad_points: int = 16) -> complex:
    """I1 = s * int_N^inf (x - floor x) / x**(s+1) dx.

    Unit panels up to a cutoff M are integrated with Gauss-Legendre; past M the
    sawtooth is expanded with Bernoulli numbers (four correction terms).
    """
    s = as_point(s)
    if s.real <= 0:
        raise DomainError(f"tail integral needs Re(s) > 0, got {s}")
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    M = N + max(32, math.ceil(4 * abs(s)))
    x, w = composite_rule(unit_panel_edges(N, M, abs(s.imag)), quad_points)
    frac = x - np.floor(x)
    body = s * np.sum(w * frac * np.exp(-(s + 1) * np.log(x)))
    # s int_M^inf ({x}) x^{-s-1} = M^{-s}/2 + s int_M^inf B1bar(x) x^{-s-1}
    lnM = math.log(M)
    tail = 0.5 * cmath.exp(-s * lnM)
    poch = s  # s (s+1) ... (s+2i-2)
    for i in range(1, 5):
        tail -= _EM_COEFFS[i - 1] * poch * cmath.exp(-(s + 2 * i - 1) * lnM)
        poch *= (s + 2 * i - 1) * (s + 2 * i)
    return _check_finite(complex(body + tail), "tail_integral")


def truncated_zeta(s, N: int) -> complex:
    """sum_{n<=N} n**-s - N**(1-s)/(1-s): the truncated form with the tail dropped."""
    s = as_point(s)
    if s == 1:
        raise PoleError("truncated form has a pole at s = 1")
    ln_n = np.log(np.arange(1, N + 1, dtype=float))
    return complex(np.sum(np.exp(-s * ln_n)) - cpow(N, 1 - s) / (1 - s))
