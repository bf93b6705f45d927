"""Composite Gauss-Legendre rules over integer-aligned panels."""
from __future__ import annotations

import math
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def composite_rule(edges: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of an ``order``-point rule on every [edges[i], edges[i+1]]."""
    gx, gw = gauss_legendre(order)
    a = edges[:-1, None]
    half = 0.5 * np.diff(edges)[:, None]
    nodes = a + half * (gx + 1.0)
    weights = half * gw
    return nodes.ravel(), weights.ravel()


def unit_panel_edges(start: int, stop: int, rate: float) -> np.ndarray:
    """Edges covering [start, stop] that respect every integer breakpoint.

    Panel [n, n+1] is split into ceil(rate / n) equal pieces so an integrand
    oscillating like x**(i*rate) turns through at most about one radian per piece.
    """
    pieces = []
    for n in range(start, stop):
        q = max(1, math.ceil(rate / n))
        pieces.append(np.linspace(n, n + 1, q + 1)[:-1])
    pieces.append(np.array([float(stop)]))
    return np.concatenate(pieces)
