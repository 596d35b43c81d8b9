"""Run the benchmark grid (algorithm x input x size) and write one CSV per table.

    python3 scripts/reproduce_tables.py --out results            # desk-scale sizes
    python3 scripts/reproduce_tables.py --out results --large    # adds 2M..16M rows
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from frselect.harness import ExperimentConfig, report_csv, run_experiment

SMALL = (50_000, 100_000, 500_000, 1_000_000)
LARGE = (2_000_000, 4_000_000, 8_000_000, 16_000_000)
SEEDED = ("random", "onezero", "twofaced")

TABLES = {
    "select_random": ("select", ("random", "onezero", "twofaced")),
    "select_structured": ("select", ("sorted", "rotated", "organpipe", "m3killer")),
    "pmselect_random": ("pmselect", ("random", "onezero", "twofaced")),
    "pmselect_structured": ("pmselect", ("sorted", "rotated", "organpipe", "m3killer")),
    "riselect_random": ("riselect", ("random", "onezero", "twofaced")),
    "riselect_structured": ("riselect", ("sorted", "rotated", "organpipe", "m3killer")),
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--large", action="store_true", help="include the 2M-16M sizes")
    ap.add_argument("--tables", nargs="*", choices=sorted(TABLES), default=sorted(TABLES))
    ap.add_argument("--k", default="median", choices=("median", "upper"))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--timings", action="store_true")
    args = ap.parse_args(argv)

    sizes = SMALL + LARGE if args.large else SMALL
    args.out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in args.tables:
        algorithm, kinds = TABLES[name]
        chunks = []
        for kind in kinds:
            cfg = ExperimentConfig(
                algorithm=algorithm, kind=kind, sizes=sizes, runs_per_size=20 if kind in SEEDED else 5,
                k_rule=args.k, base_seed=args.seed, timings=args.timings,
            )
            res = run_experiment(cfg)
            failed += res.violations
            text = report_csv(res, timings=args.timings)
            chunks.append(text if not chunks else text.split("\n", 1)[1])
            print(f"{name}: {kind} done", file=sys.stderr)
        path = args.out / f"{name}.csv"
        path.write_text("".join(chunks))
        print(path)
    if failed:
        print(f"{failed} contract violations", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
