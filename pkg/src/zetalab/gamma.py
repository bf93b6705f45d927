"""Complex Gamma function via a 15-term Lanczos sum (g = 607/128).

Accurate to roughly 1e-14 relative across the right half plane; the
reflection formula covers Re(z) < 1/2. Only the integral zeta evaluator
needs this, so there is no attempt at full special-function coverage.
"""
from __future__ import annotations

import cmath
import math

_G = 607 / 128
_COEFFS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2 * math.pi)


def log_gamma(z: complex) -> complex:
    """Principal-ish log Gamma for Re(z) >= 1/2 (imaginary part not reduced mod 2*pi)."""
    z = complex(z)
    if z.real < 0.5:
        raise ValueError("log_gamma is only defined here for Re(z) >= 1/2; use gamma()")
    z -= 1
    series = _COEFFS[0]
    for i, c in enumerate(_COEFFS[1:], start=1):
        series += c / (z + i)
    t = z + _G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(series)


def gamma(z: complex) -> complex:
    z = complex(z)
    if z.real < 0.5:
        # Gamma(z) Gamma(1-z) = pi / sin(pi z)
        sin_term = cmath.sin(math.pi * z)
        if sin_term == 0:
            raise ValueError(f"Gamma has a pole at {z}")
        return math.pi / (sin_term * gamma(1 - z))
    return cmath.exp(log_gamma(z))
