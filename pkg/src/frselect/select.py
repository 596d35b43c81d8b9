"""Sampling-based selection drivers.

``select`` returns the equal range of the k-th smallest element and leaves
strict blocks around it.  ``pmselect`` uses the cheaper binary and weak
five-way partitions and only guarantees ``x_i <= x_k <= x_j`` for i < k < j.
``sselect`` is the small-segment routine both drivers fall back to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._jit import jit, jit_recursive
from .core import (
    DEPTH, LSUM, SCALLS, SPART, SSPART, SSUM, STAGES,
    RunCounters, SelectionResult, as_kernel_array, check_ranks, compare,
    new_counter_array, write_back,
)
from .partition import (
    _binary_e, _binary_scan, _pm_equal, _pm_quintary_f, _pm_quintary_g,
    _prepare_quintary, _quintary_b, _quintary_c, _swap, _ternary_a,
    _ternary_scan, _vswap,
)
from .sampling import P_NCUT, P_RESET, SampleStrategy, _pivot_ranks, _place_sample, _sample_and_gap


@jit
def _narrow(l, r, k, a, b, c, d):
    if a <= k:
        l = b
    if c < k:
        l = d + 1
    if k <= d:
        r = c
    if k < b:
        r = a - 1
    return l, r


@jit
def _result(l, r, k):
    # l == r: single survivor; l > r: the pivot block holding k was [r+1, l-1]
    if l == r:
        return k, k
    return r + 1, l - 1


@jit
def _bump(cnt, slot, value):
    if value > cnt[slot]:
        cnt[slot] = value


# ----------------------------------------------------------------- strict


@jit
def _sselect(x, l, r, k, cnt):
    cnt[SCALLS] += 1
    while l < r:
        cnt[SSPART] += 1
        cnt[LSUM] += r - l + 1
        a, d = _ternary_a(x, l, r, k, cnt)
        l, r = _narrow(l, r, k, a, d + 1, a - 1, d)
    return _result(l, r, k)


@jit
def _draw(x, l, r, k, prm, rng, cnt):
    """Place the sample at the front of x[l:r]; returns (s, r_s, k_u, k_v)."""
    m = r - l + 1
    s, g = _sample_and_gap(m, prm)
    cnt[SSUM] += s
    _place_sample(x, l, r, s, rng)
    ku, kv = _pivot_ranks(k, l, r, s, g, prm[P_RESET] != 0.0)
    return s, l + s - 1, ku, kv


@jit
def _split(x, l, r, k, s, rs, ku, kv, kum, kup, kvm, kvp, cnt):
    """Partition the non-sample elements around the located pivots.

    ``kvm < 0`` means a single pivot was found (its block is [kum, kup]).
    Returns the narrowed (l, r).
    """
    cnt[SPART] += 1
    cnt[LSUM] += r - l + 1 - s
    if kvm < 0:
        # split the pivot's equal block so both scans keep a sentinel
        v = x[ku]
        t = kv
        if t == kum and kum == l:
            t = kum + 1
        if t > kup and kup == rs:
            a, d = _ternary_a(x, l, r, kum, cnt)
        else:
            lbar, pbar, p, qbar, rbar = _prepare_quintary(x, r, rs, kum, t - 1, t, kup)
            a, d = _ternary_scan(x, v, lbar, pbar, pbar - 1, qbar + 1, qbar, rbar, cnt)
        return _narrow(l, r, k, a, d + 1, a - 1, d)
    u = x[ku]
    v = x[kv]
    lbar, pbar, p, qbar, rbar = _prepare_quintary(x, r, rs, kum, kup, kvm, kvp)
    if k < (r + l) // 2:
        a, b, c, d = _quintary_b(x, lbar, pbar, p, qbar, rbar, u, v, cnt)
    else:
        a, b, c, d = _quintary_c(x, lbar, pbar, p, qbar, rbar, u, v, cnt)
    return _narrow(l, r, k, a, b, c, d)


@jit_recursive
def _select(x, l, r, k, prm, rng, cnt, depth):
    _bump(cnt, DEPTH, depth)
    ncut = int(prm[P_NCUT])
    stages = 0
    while l < r:
        if r - l + 1 <= ncut:
            return _sselect(x, l, r, k, cnt)
        stages += 1
        _bump(cnt, STAGES, stages)
        s, rs, ku, kv = _draw(x, l, r, k, prm, rng, cnt)
        kum, kup = _select(x, l, rs, ku, prm, rng, cnt, depth + 1)
        kvm = -1
        kvp = -1
        if kup < kv:
            kvm, kvp = _select(x, kup + 1, rs, kv, prm, rng, cnt, depth + 1)
        l, r = _split(x, l, r, k, s, rs, ku, kv, kum, kup, kvm, kvp, cnt)
    return _result(l, r, k)


@jit_recursive
def _select_stage(x, l, r, k, prm, rng, cnt, pcnt):
    # one stage of _select; the partition alone is charged to pcnt
    s, rs, ku, kv = _draw(x, l, r, k, prm, rng, cnt)
    kum, kup = _select(x, l, rs, ku, prm, rng, cnt, 1)
    kvm = -1
    kvp = -1
    if kup < kv:
        kvm, kvp = _select(x, kup + 1, rs, kv, prm, rng, cnt, 1)
    return _split(x, l, r, k, s, rs, ku, kv, kum, kup, kvm, kvp, pcnt)


# ------------------------------------------------------------ poor man's


@jit
def _pm_sselect(x, l, r, k, cnt):
    cnt[SCALLS] += 1
    while l < r:
        cnt[SSPART] += 1
        cnt[LSUM] += r - l + 1
        a, d = _binary_e(x, l, r, k, cnt)
        l, r = _narrow(l, r, k, a, d + 1, a - 1, d)


@jit
def _pm_single(x, l, r, rs, ku, cnt):
    # one pivot copy at ku; sample elements left of it are <=, right >=
    v = x[ku]
    if ku < rs:
        _vswap(x, ku + 1, rs, r)
        rbar = r - rs + ku
        i, j = _binary_scan(x, v, ku, rbar + 1, cnt)
        _swap(x, ku, j)
        return j, i - 1
    if ku > l:
        _swap(x, ku, r)
        i, j = _binary_scan(x, v, ku - 1, r, cnt)
        _swap(x, i, r)
        return j + 1, i
    return _binary_e(x, l, r, ku, cnt)


@jit_recursive
def _pmselect(x, l, r, k, prm, rng, cnt, depth):
    _bump(cnt, DEPTH, depth)
    ncut = int(prm[P_NCUT])
    reset = prm[P_RESET] != 0.0
    n = r - l + 1
    cap = 4 * int(math.ceil(math.log2(n))) if n > 1 else 0
    stages = 0
    while l < r:
        m = r - l + 1
        if m <= ncut or stages >= cap:
            _pm_sselect(x, l, r, k, cnt)
            return
        stages += 1
        _bump(cnt, STAGES, stages)
        s, g = _sample_and_gap(m, prm)
        cnt[SSUM] += s
        _place_sample(x, l, r, s, rng)
        rs = l + s - 1
        ku, kv = _pivot_ranks(k, l, r, s, g, reset)
        _pmselect(x, l, rs, ku, prm, rng, cnt, depth + 1)
        if ku < kv:
            _pmselect(x, ku + 1, rs, kv, prm, rng, cnt, depth + 1)
        cnt[SPART] += 1
        cnt[LSUM] += m - s
        if ku == kv:
            a, d = _pm_single(x, l, r, rs, ku, cnt)
            b = d + 1
            c = a - 1
        else:
            u = x[ku]
            v = x[kv]
            lbar = ku
            p = kv
            rbar = r - rs + p
            _vswap(x, p + 1, rs, r)
            _swap(x, p, rbar)
            if compare(u, v, cnt) == 0:
                a, d = _pm_equal(x, lbar, p, rbar, v, cnt)
                b = d + 1
                c = a - 1
            elif k < (r + l) // 2:
                a, b, c, d = _pm_quintary_f(x, lbar, p, rbar, u, v, cnt)
            else:
                a, b, c, d = _pm_quintary_g(x, lbar, p, rs, r, rbar, u, v, cnt)
        l, r = _narrow(l, r, k, a, b, c, d)


# ---------------------------------------------------------------- public


@dataclass(frozen=True)
class SelectConfig:
    strategy: SampleStrategy = SampleStrategy()
    family: str = "select"  # or "pmselect"

    def __post_init__(self):
        if self.family not in ("select", "pmselect"):
            raise ValueError(f"unknown family {self.family!r}")


def _setup(x, k, l, r, rng, seed):
    n = len(x)
    r = n if r is None else r
    check_ranks(n, l, k, r)
    arr = as_kernel_array(x)
    if rng is None:
        rng = np.random.default_rng(seed)
    return arr, r, rng


def _commit(x, arr, cnt, counters):
    write_back(x, arr)
    if counters is not None:
        counters.update(RunCounters.from_array(cnt))


def select(
    x, k: int, l: int = 1, r: int | None = None, *,
    strategy: SampleStrategy | None = None,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
    counters: RunCounters | None = None,
) -> SelectionResult:
    """Permute x[l:r] in place so x_k is the k-th smallest; return its equal range.

    Indices are 1-based and inclusive.  Afterwards every element of x[l:r]
    before ``k_minus`` is smaller than x_k and every one after ``k_plus``
    is larger.
    """
    arr, r, rng = _setup(x, k, l, r, rng, seed)
    strategy = strategy or SampleStrategy()
    cnt = new_counter_array()
    km, kp = _select(arr, l - 1, r - 1, k - 1, strategy.params(), rng, cnt, 0)
    _commit(x, arr, cnt, counters)
    return SelectionResult(int(km) + 1, int(kp) + 1)


def sselect(
    x, k: int, l: int = 1, r: int | None = None, *, counters: RunCounters | None = None
) -> SelectionResult:
    """Small-segment selection by repeated three-way partitioning around x_k."""
    arr, r, _ = _setup(x, k, l, r, None, 0)
    cnt = new_counter_array()
    km, kp = _sselect(arr, l - 1, r - 1, k - 1, cnt)
    _commit(x, arr, cnt, counters)
    return SelectionResult(int(km) + 1, int(kp) + 1)


def pmselect(
    x, k: int, l: int = 1, r: int | None = None, *,
    strategy: SampleStrategy | None = None,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
    counters: RunCounters | None = None,
) -> None:
    """Like :func:`select` with cheaper partitions; only the weak order around k holds."""
    arr, r, rng = _setup(x, k, l, r, rng, seed)
    strategy = strategy or SampleStrategy()
    cnt = new_counter_array()
    _pmselect(arr, l - 1, r - 1, k - 1, strategy.params(), rng, cnt, 0)
    _commit(x, arr, cnt, counters)


def select_stage(
    x, k: int, l: int = 1, r: int | None = None, *,
    strategy: SampleStrategy | None = None,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
) -> tuple[int, int, int]:
    """Run a single sampling stage of :func:`select`.

    Returns the narrowed 1-based (l, r) and the number of comparisons spent
    partitioning the non-sample elements.  The pivot searches on the sample
    are not included in that count.
    """
    arr, r, rng = _setup(x, k, l, r, rng, seed)
    if r - l + 1 < 3:
        raise ValueError("a stage needs at least three elements")
    strategy = strategy or SampleStrategy()
    cnt = new_counter_array()
    pcnt = new_counter_array()
    nl, nr = _select_stage(arr, l - 1, r - 1, k - 1, strategy.params(), rng, cnt, pcnt)
    write_back(x, arr)
    return int(nl) + 1, int(nr) + 1, int(pcnt[0])
