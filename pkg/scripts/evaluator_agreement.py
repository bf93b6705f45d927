"""Pairwise gaps between the three zeta evaluators on random strip points.

    python scripts/evaluator_agreement.py --points 200 --t-max 40 --threads 0
"""
import argparse

import numpy as np

from zetalab._parallel import parallel_map
from zetalab.zeta_eval import em_zeta, integral_zeta, zeta_from_eta


def gaps(s):
    em, eta, integ = em_zeta(s), zeta_from_eta(s), integral_zeta(s)
    return (s, abs(em.value - eta.value), abs(em.value - integ.value), abs(eta.value - integ.value),
            em.error_bound, eta.error_bound, integ.error_bound)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=100)
    ap.add_argument("--t-max", type=float, default=30.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    pts = [complex(rng.uniform(0.5, 0.99), rng.uniform(-args.t_max, args.t_max))
           for _ in range(args.points)]
    print("sigma,t,em_eta,em_integral,eta_integral,bound_em,bound_eta,bound_integral")
    for s, *vals in parallel_map(gaps, pts, args.threads):
        print(f"{s.real:.6f},{s.imag:.6f}," + ",".join(f"{v:.3e}" for v in vals))


if __name__ == "__main__":
    main()
