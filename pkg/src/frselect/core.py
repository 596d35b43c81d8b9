"""Shared types, run counters and result checks.

All public indices are 1-based.  Kernels work 0-based internally; every
index formula they use is translation invariant, so the shift is exact.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, fields
from typing import Any

import numpy as np

from ._jit import JIT_ENABLED, jit

# Slots of the int64 counter array threaded through every kernel.
CMP = 0  # element comparisons
LSUM = 1  # sum of partitioned segment sizes
SPART = 2  # SELECT-level partitions
SCALLS = 3  # sSelect calls
SSPART = 4  # sSelect partitions
SSUM = 5  # sum of sample sizes
NRND = 6  # riSELECT randomization steps
DEPTH = 7  # high-water mark of sample recursion depth
STAGES = 8  # high-water mark of sampling stages within one call
NSLOTS = 9


@jit
def compare(a, b, cnt):
    """Three-way element comparison; the only place comparisons are counted."""
    cnt[CMP] += 1
    if a < b:
        return -1
    if b < a:
        return 1
    return 0


def new_counter_array() -> np.ndarray:
    return np.zeros(NSLOTS, dtype=np.int64)


@dataclass
class RunCounters:
    comparisons: int = 0
    partition_size_sum: int = 0
    select_partitions: int = 0
    sselect_calls: int = 0
    sselect_partitions: int = 0
    sample_size_sum: int = 0
    randomizations: int = 0
    # High-water marks; merged by max rather than by sum.
    max_depth: int = 0
    max_stages: int = 0

    _PEAKS = ("max_depth", "max_stages")

    @classmethod
    def from_array(cls, arr: np.ndarray) -> RunCounters:
        return cls(*(int(v) for v in arr[:NSLOTS]))

    def __add__(self, other: RunCounters) -> RunCounters:
        return counters_merge(self, other)

    def update(self, other: RunCounters) -> None:
        """Accumulate ``other`` into this instance."""
        merged = counters_merge(self, other)
        for f in fields(self):
            setattr(self, f.name, getattr(merged, f.name))


def counters_merge(a: RunCounters, b: RunCounters) -> RunCounters:
    vals = {}
    for f in fields(RunCounters):
        x, y = getattr(a, f.name), getattr(b, f.name)
        vals[f.name] = max(x, y) if f.name in RunCounters._PEAKS else x + y
    return RunCounters(**vals)


def normalize(counters: RunCounters, n: int, f_n: float) -> dict[str, float]:
    """Scale one run's counters the way the benchmark tables report them."""
    if n < 1:
        raise ValueError("n must be positive")
    if f_n <= 0:
        raise ValueError("f_n must be positive")
    ln_n = math.log(n) if n > 1 else 1.0
    c = counters.comparisons
    calls = counters.sselect_calls
    return {
        "cmp_per_n": c / n,
        "L_per_n": counters.partition_size_sum / n,
        "gamma": (c - 1.5 * n) / f_n,
        "s_pct": 100.0 * counters.sample_size_sum / n,
        "P_per_ln": counters.select_partitions / ln_n,
        "N_per_ln": calls / ln_n,
        "p_per_call": counters.sselect_partitions / calls if calls else 0.0,
        "rnd": float(counters.randomizations),
    }


@dataclass(frozen=True)
class SelectionResult:
    k_minus: int
    k_plus: int


@dataclass(frozen=True)
class PartitionBounds:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def ternary(cls, a: int, d: int) -> PartitionBounds:
        return cls(a, d + 1, a - 1, d)


@dataclass
class Workspace:
    elements: Any
    l: int
    r: int
    k: int

    def __post_init__(self):
        n = len(self.elements)
        if not 1 <= self.l <= self.k <= self.r <= n:
            raise ValueError(f"need 1 <= l <= k <= r <= n, got l={self.l} k={self.k} r={self.r} n={n}")


def check_ranks(n: int, l: int, k: int, r: int) -> None:
    if not 1 <= l <= k <= r <= n:
        raise ValueError(f"need 1 <= l <= k <= r <= n, got l={l} k={k} r={r} n={n}")


def as_kernel_array(x) -> np.ndarray:
    """Return the array the kernels mutate; lists are converted (caller writes back)."""
    if isinstance(x, np.ndarray):
        arr = x
    elif JIT_ENABLED:
        arr = np.asarray(x)
    else:
        return x
    if arr.ndim != 1:
        raise ValueError("expected a 1-D array")
    if JIT_ENABLED:
        if arr.dtype.kind not in "iuf":
            raise TypeError(
                f"compiled kernels need integer or float elements, got {arr.dtype}; "
                "set NUMBA_DISABLE_JIT=1 for arbitrary comparable values"
            )
        if arr.dtype.kind == "f" and np.isnan(arr).any():
            raise ValueError("NaN is not totally ordered")
    return arr


def write_back(x, arr) -> None:
    if arr is not x:
        x[:] = arr.tolist()


def check_selection(x, k: int, result: SelectionResult, l: int = 1, r: int | None = None) -> bool:
    """One-pass check of the strict equal-range post-state (1-based)."""
    seg = np.asarray(x)[l - 1 : (len(x) if r is None else r)]
    km, kp = result.k_minus - l, result.k_plus - l
    if not 0 <= km <= k - l <= kp < len(seg):
        return False
    v = seg[k - l]
    return bool(
        np.all(seg[:km] < v) and np.all(seg[km : kp + 1] == v) and np.all(seg[kp + 1 :] > v)
    )


def check_weak(x, k: int, l: int = 1, r: int | None = None) -> bool:
    """Check x_i <= x_k left of k and x_k <= x_i right of k within [l, r]."""
    seg = np.asarray(x)[l - 1 : (len(x) if r is None else r)]
    i = k - l
    v = seg[i]
    return bool(np.all(seg[:i] <= v) and np.all(seg[i + 1 :] >= v))


def multiset_digest(x) -> str:
    """Hash of the sorted contents; equal digests mean equal multisets."""
    arr = np.asarray(x)
    if arr.dtype.kind in "biuf":
        data = np.sort(arr).tobytes()
    else:
        data = repr(sorted(x)).encode()
    return hashlib.sha256(data).hexdigest()
