"""Order of the remainder left after the N/2 decomposition of N^s phi(N, s).

Prints, for each (sigma, t), the least-squares slope of log2|residual| against
log2 N in double precision and in 40-digit mpmath, next to 2 sigma - 3 and
2 sigma - 4.

    python scripts/residual_order.py --n-max 4096
"""
import argparse
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
import oracles  # noqa: E402

from zetalab.psi_probe import decomposition_slope  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=64)
    ap.add_argument("--n-max", type=int, default=4096)
    ap.add_argument("--sigmas", type=float, nargs="+", default=[0.6, 0.75, 0.9])
    ap.add_argument("--ts", type=float, nargs="+", default=[0.0, 2.0, 5.0, 20.0])
    ap.add_argument("--no-mp", action="store_true", help="skip the high-precision column")
    args = ap.parse_args()

    Ns = []
    N = args.n_min
    while N <= args.n_max:
        Ns.append(N)
        N *= 2
    print("sigma,t,slope_float64,slope_mp40,two_sigma_minus_3,two_sigma_minus_4")
    for sigma in args.sigmas:
        for t in args.ts:
            s = complex(sigma, t)
            fast = decomposition_slope(s, Ns)
            if args.no_mp:
                slow = float("nan")
            else:
                r = [oracles.decomposition_residual(s, n) for n in Ns]
                slow = np.polyfit(np.log2(Ns), np.log2(r), 1)[0]
            print(f"{sigma},{t},{fast:.4f},{slow:.4f},{2 * sigma - 3:.2f},{2 * sigma - 4:.2f}")


if __name__ == "__main__":
    main()
