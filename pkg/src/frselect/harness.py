"""Benchmark runner and Monte Carlo checks of the sampling bounds."""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .baseline import RiConfig, riselect
from .core import RunCounters, check_selection, check_weak, normalize
from .generators import InputSpec, generate
from .sampling import SampleStrategy, f_fr, sample_and_gap
from .select import pmselect, select, select_stage

ALGORITHMS = ("select", "pmselect", "riselect")

HEADER = (
    "algo", "input", "n", "k", "runs",
    "cmp_avg", "cmp_max", "cmp_min", "gamma_avg", "L_avg", "P_avg", "N_avg", "p_avg",
    "s_avg_pct", "rnd_avg", "violations",
)
TIMING_HEADER = ("time_avg", "time_max", "time_min")
RUN_HEADER = ("algo", "input", "n", "k", "run", "seed", "comparisons", "L", "P", "N", "sselect_parts", "s_sum", "rnd", "ok")


@dataclass(frozen=True)
class ExperimentConfig:
    algorithm: str = "select"
    kind: str = "random"
    sizes: tuple[int, ...] = (50_000, 100_000, 500_000, 1_000_000)
    runs_per_size: int = 20
    k_rule: str | int = "median"  # "median" = ceil(n/2), "upper" = ceil(n/2) + 1, or an explicit rank
    strategy: SampleStrategy = SampleStrategy()
    ri: RiConfig = RiConfig()
    base_seed: int = 0
    timings: bool = False
    per_run: bool = False

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.runs_per_size < 1:
            raise ValueError("runs_per_size must be at least 1")
        if not self.sizes:
            raise ValueError("sizes must be nonempty")
        for n in self.sizes:
            InputSpec(self.kind, n)  # validates (kind, n)
            self.rank(n)

    def rank(self, n: int) -> int:
        if self.k_rule == "median":
            k = (n + 1) // 2
        elif self.k_rule == "upper":
            k = (n + 1) // 2 + 1
        else:
            k = int(self.k_rule)
        if not 1 <= k <= n:
            raise ValueError(f"rank {k} outside 1..{n}")
        return k


@dataclass
class ExperimentResult:
    rows: list[dict] = field(default_factory=list)
    run_rows: list[dict] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(r["violations"] for r in self.rows)


def _run_once(cfg: ExperimentConfig, n: int, k: int, seed: int) -> tuple[RunCounters, bool, float]:
    gen_seq, algo_seq = np.random.SeedSequence(seed).spawn(2)
    x = generate(InputSpec(cfg.kind, n, seed), dtype=np.float64, rng=np.random.default_rng(gen_seq))
    expected = np.partition(x, k - 1)[k - 1]
    rng = np.random.default_rng(algo_seq)
    c = RunCounters()
    t0 = time.perf_counter()
    if cfg.algorithm == "select":
        res = select(x, k, strategy=cfg.strategy, rng=rng, counters=c)
        elapsed = time.perf_counter() - t0
        ok = check_selection(x, k, res)
    else:
        if cfg.algorithm == "pmselect":
            pmselect(x, k, strategy=cfg.strategy, rng=rng, counters=c)
        else:
            riselect(x, k, cfg=cfg.ri, rng=rng, counters=c)
        elapsed = time.perf_counter() - t0
        ok = check_weak(x, k)
    return c, bool(ok and x[k - 1] == expected), elapsed


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """One aggregate row per size; run i uses seed base_seed + i."""
    out = ExperimentResult()
    for n in cfg.sizes:
        k = cfg.rank(n)
        runs, times, bad = [], [], 0
        for i in range(cfg.runs_per_size):
            seed = cfg.base_seed + i
            c, ok, elapsed = _run_once(cfg, n, k, seed)
            runs.append(c)
            times.append(elapsed)
            bad += not ok
            if cfg.per_run:
                out.run_rows.append({
                    "algo": cfg.algorithm, "input": cfg.kind, "n": n, "k": k, "run": i, "seed": seed,
                    "comparisons": c.comparisons, "L": c.partition_size_sum, "P": c.select_partitions,
                    "N": c.sselect_calls, "sselect_parts": c.sselect_partitions,
                    "s_sum": c.sample_size_sum, "rnd": c.randomizations, "ok": int(ok),
                })
        total = RunCounters()
        for c in runs:
            total.update(c)
        m = len(runs)
        mean = RunCounters(*(getattr(total, f) / m for f in (
            "comparisons", "partition_size_sum", "select_partitions", "sselect_calls",
            "sselect_partitions", "sample_size_sum", "randomizations")))
        fn = f_fr(n) if n >= 2 else 1.0
        norm = normalize(mean, n, fn)
        cmps = [c.comparisons / n for c in runs]
        row = {
            "algo": cfg.algorithm, "input": cfg.kind, "n": n, "k": k, "runs": m,
            "cmp_avg": norm["cmp_per_n"], "cmp_max": max(cmps), "cmp_min": min(cmps),
            "gamma_avg": norm["gamma"], "L_avg": norm["L_per_n"], "P_avg": norm["P_per_ln"],
            "N_avg": norm["N_per_ln"], "p_avg": norm["p_per_call"], "s_avg_pct": norm["s_pct"],
            "rnd_avg": total.randomizations / m, "violations": bad,
        }
        if cfg.timings:
            row.update(time_avg=sum(times) / m, time_max=max(times), time_min=min(times))
        out.rows.append(row)
    return out


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def to_csv(rows: list[dict], header: tuple[str, ...]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(row[h]) for h in header])
    return buf.getvalue()


def report_csv(result: ExperimentResult, timings: bool = False) -> str:
    header = HEADER + TIMING_HEADER if timings else HEADER
    return to_csv(result.rows, header)


# ------------------------------------------------------------ bound checks


@dataclass(frozen=True)
class BoundCheckSpec:
    """s draws without replacement from n balls of which r are red; gap g."""

    n: int
    r: int
    s: int
    g: float
    trials: int = 10_000

    def __post_init__(self):
        if not 0 <= self.r <= self.n:
            raise ValueError("need 0 <= r <= n")
        if not 1 <= self.s <= self.n:
            raise ValueError("need 1 <= s <= n")
        if self.g < 0:
            raise ValueError("g must be nonnegative")

    @property
    def p(self) -> float:
        return self.r / self.n

    @property
    def bound(self) -> float:
        return math.exp(-2 * self.g**2 / self.s)

    def bounding_indices(self, k: int) -> tuple[int, int]:
        """Ranks (k_l, k_r) that bracket the pivots with high probability."""
        w = 2 * self.g * self.n / self.s
        return max(math.ceil(k - w), 1), min(math.ceil(k + w), self.n)


def hypergeometric_tail_mc(spec: BoundCheckSpec, rng: np.random.Generator) -> tuple[float, float]:
    """Estimate P[r' >= p s + g] for r' red draws; returns (estimate, standard error)."""
    if spec.trials == 0:
        return math.nan, math.nan
    red = rng.hypergeometric(spec.r, spec.n - spec.r, spec.s, size=spec.trials)
    # r'/s >= r/n + g/s, kept in integers where possible
    hits = np.count_nonzero(red * spec.n >= spec.r * spec.s + spec.g * spec.n)
    est = hits / spec.trials
    return est, math.sqrt(est * (1 - est) / spec.trials)


def random_tail_specs(count: int, rng: np.random.Generator, trials: int = 10_000,
                      lo: float = 1e-3, hi: float = 1e-1) -> list[BoundCheckSpec]:
    """Random configurations whose bound exp(-2 g^2 / s) lies in [lo, hi]."""
    specs = []
    while len(specs) < count:
        n = int(rng.integers(100, 100_000))
        s = int(rng.integers(10, max(11, n // 2)))
        r = int(rng.integers(0, n + 1))
        b = math.exp(rng.uniform(math.log(lo), math.log(hi)))
        g = math.sqrt(s * math.log(1 / b) / 2)
        specs.append(BoundCheckSpec(n, r, s, g, trials))
    return specs


@dataclass
class ShrinkageReport:
    n: int
    k: int
    s: int
    g: float
    trials: int
    bad_shrink: int = 0
    over_cost: int = 0

    @property
    def shrink_threshold(self) -> float:
        return 4 * self.g * self.n / self.s

    @property
    def cost_threshold(self) -> float:
        n, k, s = self.n, self.k, self.s
        return n + min(k, n - k) - s + 2 * self.g * n / s

    @property
    def freq_bad_shrink(self) -> float:
        return self.bad_shrink / self.trials if self.trials else math.nan

    @property
    def freq_over_cost(self) -> float:
        return self.over_cost / self.trials if self.trials else math.nan

    @staticmethod
    def sigma(p: float, trials: int) -> float:
        return math.sqrt(p * (1 - p) / trials) if trials else math.nan


def shrinkage_mc(n: int, k: int, strategy: SampleStrategy, trials: int, rng: np.random.Generator) -> ShrinkageReport:
    """Run single sampling stages on random permutations and tally bad outcomes.

    A stage is bad if the surviving segment has at least 4gn/s elements, or
    if partitioning the non-sample elements costs more than
    n + min(k, n-k) - s + 2gn/s comparisons.
    """
    s, g = sample_and_gap(n, strategy)
    if s >= n - 1:
        raise ValueError("n too small for a proper sample")
    rep = ShrinkageReport(n, k, s, g, trials)
    for _ in range(trials):
        x = rng.permutation(n).astype(np.float64)
        l, r, c = select_stage(x, k, strategy=strategy, rng=rng)
        size = max(0, r - l + 1)
        rep.bad_shrink += size >= rep.shrink_threshold
        rep.over_cost += c > rep.cost_threshold
    return rep
