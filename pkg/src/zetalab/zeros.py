"""Critical-line zero location and zero-free-region sampling.

Zeros are found by sampling |zeta(sigma + it)| on a grid, refining every
interior grid minimum with golden-section search and keeping those whose
refined modulus is below a tolerance. Without a real rotation of zeta on the
line, a sign-change search is not available, so minimisation plus a residual
threshold is the detection rule.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ._parallel import parallel_map
from .errors import DomainError
from .zeta_eval import EMParams, em_zeta, em_zeta_values

log = logging.getLogger(__name__)

REGION_CONSTANT = 5.573412
INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    t: float
    residual: float
    bracket_width: float


@dataclass(frozen=True)
class RegionReport:
    t_range: tuple[float, float]
    samples: int
    min_abs_zeta: float
    argmin_point: complex
    sigma_samples: int
    t_samples: int
    sigma_bound_range: tuple[float, float]


def _grid_N(t_max: float) -> int:
    return max(50, 2 * math.ceil(abs(t_max)))


def abs_zeta_on_line(sigma: float, ts: np.ndarray, threads: int = 1, m: int = 10) -> np.ndarray:
    ts = np.asarray(ts, dtype=float)
    N = _grid_N(np.max(np.abs(ts)))
    chunks = np.array_split(ts, max(1, min(len(ts) // 256, 64)))
    parts = parallel_map(lambda c: np.abs(em_zeta_values(sigma + 1j * c, N, m)), chunks, threads)
    return np.concatenate(parts)


def golden_section(f, a: float, b: float, width: float) -> tuple[float, float]:
    """Shrink [a, b] around a minimum of a unimodal ``f`` until b - a < width."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a >= width:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        if c >= d:  # interval below floating-point resolution
            break
    return a, b


def _refine(sigma: float, lo: float, hi: float, width: float) -> tuple[float, float, float]:
    N = _grid_N(hi)

    def abs_zeta(t: float) -> float:
        # |zeta| rather than |zeta|^2: same minimiser, resolves the V-shaped
        # dip to ~1e-15 instead of ~1e-8
        return abs(em_zeta(complex(sigma, t), EMParams(N, 10)).value)

    a, b = golden_section(abs_zeta, lo, hi, width)
    t = 0.5 * (a + b)
    return t, abs_zeta(t), b - a


def scan_critical_line(
    t_min: float,
    t_max: float,
    step: float = 0.05,
    tol: float = 1e-6,
    *,
    sigma: float = 0.5,
    width: float = 1e-9,
    threads: int = 1,
) -> list[ZeroRecord]:
    """Locate zeros of zeta on Re(s) = ``sigma`` with ordinates in [t_min, t_max].

    Minima whose refined residual lands in [tol, 100 tol] are logged as
    warnings (likely evaluator-limited near misses) and not returned.
    """
    if not (0 < t_min < t_max) or not all(map(math.isfinite, (t_min, t_max))):
        raise DomainError(f"need 0 < t_min < t_max, got [{t_min}, {t_max}]")
    if not 0 < step <= 0.5:
        raise DomainError(f"step must lie in (0, 0.5], got {step}")
    if tol < 0:
        raise DomainError(f"tol must be non-negative, got {tol}")
    n = int(math.floor((t_max - t_min) / step + 1e-9))
    ts = t_min + step * np.arange(n + 1)
    if ts[-1] < t_max:
        ts = np.append(ts, t_max)
    values = abs_zeta_on_line(sigma, ts, threads)
    interior = np.flatnonzero((values[1:-1] <= values[:-2]) & (values[1:-1] <= values[2:])) + 1

    refined = parallel_map(
        lambda i: _refine(sigma, ts[i - 1], ts[i + 1], width), interior, threads
    )
    records = []
    for t, residual, bracket in sorted(refined):
        if records and abs(t - records[-1].t) < 10 * width:
            continue  # plateau minimum seen from two neighbouring grid points
        if residual < tol:
            records.append(ZeroRecord(len(records) + 1, float(t), float(residual), float(bracket)))
        elif residual < 100 * tol:
            log.warning("near-miss minimum at t=%.12g with |zeta|=%.3g (tol %.3g)", t, residual, tol)
    return records


def verify_symmetry(z: ZeroRecord, tol: float) -> bool:
    """Check that both 1/2 + it and its conjugate 1/2 - it are zeros to within ``tol``."""
    N = _grid_N(z.t)
    p = EMParams(N, 10)
    upper = abs(em_zeta(complex(0.5, z.t), p).value)
    lower = abs(em_zeta(complex(0.5, -z.t), p).value)
    return upper <= tol and lower <= tol


def region_sigma_bound(t: float) -> float:
    """Left edge 1 - 1/(5.573412 log|t|) of the zero-free region."""
    if not abs(t) >= 2:
        raise DomainError(f"the zero-free region is stated for |t| >= 2, got {t}")
    return 1 - 1 / (REGION_CONSTANT * math.log(abs(t)))


def verify_region(
    t_min: float,
    t_max: float,
    sigma_samples: int = 20,
    t_samples: int = 200,
    threads: int = 1,
) -> RegionReport:
    """Sample |zeta| on sigma in [edge(t), 1] for t in [t_min, t_max] (sampling, not a proof).

    With a single sigma sample only the line sigma = 1 is probed.
    """
    if not (2 <= t_min <= t_max <= 200) or (t_min == t_max and t_samples != 1):
        raise DomainError(f"need 2 <= t_min < t_max <= 200, got [{t_min}, {t_max}]")
    if sigma_samples < 1 or t_samples < 1:
        raise DomainError("sample counts must be positive")
    ts = np.linspace(t_min, t_max, t_samples)
    edges = np.array([region_sigma_bound(t) for t in ts])
    if sigma_samples == 1:
        frac = np.array([1.0])
    else:
        frac = np.linspace(0.0, 1.0, sigma_samples)
    sig = edges[:, None] + frac[None, :] * (1.0 - edges[:, None])
    points = sig + 1j * ts[:, None]
    N = _grid_N(t_max)
    rows = parallel_map(lambda row: np.abs(em_zeta_values(row, N, 10)), points, threads)
    mags = np.vstack(rows)
    k = int(np.argmin(mags))
    return RegionReport(
        t_range=(float(t_min), float(t_max)),
        samples=int(mags.size),
        min_abs_zeta=float(mags.flat[k]),
        argmin_point=complex(points.flat[k]),
        sigma_samples=sigma_samples,
        t_samples=t_samples,
        sigma_bound_range=(float(edges.min()), float(edges.max())),
    )
