"""Command line entry point: ``frselect bench`` and ``frselect verify-bounds``."""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .baseline import RiConfig
from .generators import KINDS
from .harness import (
    ALGORITHMS, RUN_HEADER, ExperimentConfig, hypergeometric_tail_mc, random_tail_specs,
    report_csv, run_experiment, shrinkage_mc, to_csv,
)
from .sampling import SCHEMES, SampleStrategy


def _ints(text: str) -> list[int]:
    return [int(float(t)) for t in text.split(",") if t]


def _k_rule(text: str):
    return text if text in ("median", "upper") else int(text)


def _strategy(args) -> SampleStrategy:
    return SampleStrategy(variant=SCHEMES[args.scheme], alpha=args.alpha, beta=args.beta, n_cut=args.ncut)


def _add_strategy_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scheme", choices=sorted(SCHEMES), default="fr")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--beta", type=float, default=0.25)
    p.add_argument("--ncut", type=int, default=600)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frselect", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="count comparisons over seeded runs and write a CSV report")
    b.add_argument("--algo", choices=ALGORITHMS, default="select")
    b.add_argument("--input", choices=KINDS, default="random")
    b.add_argument("--n", type=_ints, default=[50_000, 100_000, 500_000, 1_000_000],
                   help="comma separated sizes, e.g. 1e5,1e6")
    b.add_argument("--runs", type=int, default=None, help="default: 20 for seeded kinds, 5 otherwise")
    b.add_argument("--k", type=_k_rule, default="median", help="median, upper or a 1-based rank")
    _add_strategy_args(b)
    b.add_argument("--shrink", type=float, default=15 / 16, help="riselect randomization threshold")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", default="-", help="output path, '-' for stdout")
    b.add_argument("--per-run", default=None, metavar="PATH", help="also write one row per run here")
    b.add_argument("--timings", action="store_true", help="add wall-clock columns (not reproducible)")

    v = sub.add_parser("verify-bounds", help="Monte Carlo checks of the sampling tail bounds")
    v.add_argument("--mode", choices=("tail", "shrink"), required=True)
    v.add_argument("--configs", type=int, default=20, help="tail mode: random configurations")
    v.add_argument("--trials", type=int, default=None, help="default: 10000 (tail) or 1000 (shrink)")
    v.add_argument("--n", type=int, default=100_000, help="shrink mode: input size")
    v.add_argument("--k", type=_ints, default=None, help="shrink mode: ranks (default 1,n/4,ceil(n/2),n)")
    _add_strategy_args(v)
    v.add_argument("--seed", type=int, default=0)
    return ap


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def cmd_bench(args) -> int:
    runs = args.runs or (20 if args.input in ("random", "onezero", "twofaced") else 5)
    cfg = ExperimentConfig(
        algorithm=args.algo, kind=args.input, sizes=tuple(args.n), runs_per_size=runs,
        k_rule=args.k, strategy=_strategy(args), ri=RiConfig(args.shrink), base_seed=args.seed,
        timings=args.timings, per_run=args.per_run is not None,
    )
    res = run_experiment(cfg)
    _write(args.csv, report_csv(res, timings=args.timings))
    if args.per_run:
        _write(args.per_run, to_csv(res.run_rows, RUN_HEADER))
    if res.violations:
        print(f"contract violations: {res.violations}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    rng = np.random.default_rng(args.seed)
    failed = 0
    if args.mode == "tail":
        trials = args.trials or 10_000
        print("n,r,s,g,bound,estimate,stderr,pass")
        for spec in random_tail_specs(args.configs, rng, trials):
            est, se = hypergeometric_tail_mc(spec, rng)
            ok = est <= spec.bound + 3 * se
            failed += not ok
            print(f"{spec.n},{spec.r},{spec.s},{spec.g:.4f},{spec.bound:.6f},{est:.6f},{se:.6f},{int(ok)}")
    else:
        trials = args.trials or 1000
        n = args.n
        strategy = _strategy(args)
        ks = args.k or [1, n // 4, (n + 1) // 2, n]
        p = n ** (-2 * strategy.beta)
        print("n,k,s,g,freq_shrink,bound_shrink,freq_cost,bound_cost,pass")
        for k in ks:
            rep = shrinkage_mc(n, k, strategy, trials, rng)
            b1 = 4 * p + 3 * rep.sigma(4 * p, trials)
            b2 = p + 3 * rep.sigma(p, trials)
            ok = rep.freq_bad_shrink <= b1 and rep.freq_over_cost <= b2
            failed += not ok
            print(f"{n},{k},{rep.s},{rep.g:.4f},{rep.freq_bad_shrink:.6f},{b1:.6f},"
                  f"{rep.freq_over_cost:.6f},{b2:.6f},{int(ok)}")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "bench":
        return cmd_bench(args)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
