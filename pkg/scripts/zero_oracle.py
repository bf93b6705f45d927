"""Independent count and location of critical-line zeros for t in (0, t_max].

Rotates the eta-route value of zeta(1/2 + it) by exp(i theta(t)) (theta from
mpmath's Riemann-Siegel theta) so that it is real, counts sign changes on a
grid and bisects each one. Shares no code path with the golden-section scan
in ``zetalab.zeros``; its output is frozen into tests/test_zeros.py.

    python scripts/zero_oracle.py --t-max 100
"""
import argparse
import json
import math

import mpmath
import numpy as np

from zetalab.zeta_eval import zeta_from_eta


def rotated(t: float, terms: int) -> float:
    z = zeta_from_eta(complex(0.5, t), terms).value
    theta = float(mpmath.siegeltheta(t))
    return (complex(math.cos(theta), math.sin(theta)) * z).real


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--t-max", type=float, default=100.0)
    ap.add_argument("--step", type=float, default=0.1)
    ap.add_argument("--terms", type=int, default=200_000)
    ap.add_argument("--xtol", type=float, default=1e-9)
    args = ap.parse_args()

    ts = np.arange(args.step, args.t_max + 1e-12, args.step)
    vals = [rotated(t, args.terms) for t in ts]
    zeros = []
    for i in range(len(ts) - 1):
        if vals[i] == 0 or vals[i] * vals[i + 1] < 0:
            lo, hi, flo = ts[i], ts[i + 1], vals[i]
            while hi - lo > args.xtol:
                mid = 0.5 * (lo + hi)
                fm = rotated(mid, args.terms)
                if fm * flo <= 0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            zeros.append(0.5 * (lo + hi))
    print(json.dumps({"count": len(zeros), "t": [round(z, 9) for z in zeros]}, indent=1))


if __name__ == "__main__":
    main()
