"""Monte Carlo checks of the sampling tail bound and of single-stage shrinkage.

Prints one line per configuration and a final verdict; exit status 1 if any
estimate lands above its bound plus three standard errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from frselect.harness import hypergeometric_tail_mc, random_tail_specs, shrinkage_mc
from frselect.sampling import SampleStrategy


def tail(configs: int, trials: int, rng) -> int:
    bad = 0
    for spec in random_tail_specs(configs, rng, trials):
        est, se = hypergeometric_tail_mc(spec, rng)
        ok = est <= spec.bound + 3 * se
        bad += not ok
        print(f"tail n={spec.n:6d} r={spec.r:6d} s={spec.s:6d} g={spec.g:8.3f} "
              f"bound={spec.bound:.5f} est={est:.5f}±{se:.5f} {'ok' if ok else 'FAIL'}")
    return bad


def shrink(sizes, trials: int, beta: float, rng) -> int:
    bad = 0
    strategy = SampleStrategy(beta=beta)
    for n in sizes:
        p = n ** (-2 * beta)
        for k in (1, n // 4, (n + 1) // 2, n):
            rep = shrinkage_mc(n, k, strategy, trials, rng)
            b1 = 4 * p + 3 * rep.sigma(4 * p, trials)
            b2 = p + 3 * rep.sigma(p, trials)
            ok = rep.freq_bad_shrink <= b1 and rep.freq_over_cost <= b2
            bad += not ok
            print(f"shrink n={n} k={k} s={rep.s} g={rep.g:.2f} "
                  f"size>={rep.shrink_threshold:.0f}: {rep.freq_bad_shrink:.4f} (<= {b1:.4f})  "
                  f"cost>{rep.cost_threshold:.0f}: {rep.freq_over_cost:.4f} (<= {b2:.4f}) {'ok' if ok else 'FAIL'}")
    return bad


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--configs", type=int, default=20)
    ap.add_argument("--tail-trials", type=int, default=10_000)
    ap.add_argument("--shrink-trials", type=int, default=1000)
    ap.add_argument("--sizes", type=lambda t: [int(float(v)) for v in t.split(",")], default=[100_000])
    ap.add_argument("--beta", type=float, default=0.25)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    bad = tail(args.configs, args.tail_trials, rng) + shrink(args.sizes, args.shrink_trials, args.beta, rng)
    print("all bounds hold" if not bad else f"{bad} bound checks failed")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
