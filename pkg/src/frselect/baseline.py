"""Median-of-3 quickselect that re-randomizes its pivot candidates on slow progress."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._jit import jit
from .core import LSUM, NRND, SPART, RunCounters, as_kernel_array, check_ranks, compare, new_counter_array, write_back
from .partition import _swap


@dataclass(frozen=True)
class RiConfig:
    # a segment that keeps more than this fraction of its size triggers randomization
    shrink_factor: float = 15 / 16

    def __post_init__(self):
        if not 0 < self.shrink_factor < 1:
            raise ValueError("shrink_factor must lie in (0, 1)")


@jit
def _riselect(x, l, r, k, shrink, rng, cnt):
    randomize = False
    while r > l:
        m = r - l + 1
        if m == 2:
            if compare(x[r], x[l], cnt) < 0:
                _swap(x, l, r)
            return
        mid = (l + r) // 2
        if randomize:
            cnt[NRND] += 1
            _swap(x, l, l + rng.integers(0, m))
            _swap(x, mid, l + rng.integers(0, m))
            _swap(x, r, l + rng.integers(0, m))
        # sort the three candidates in place; the outer two become sentinels
        if compare(x[mid], x[l], cnt) < 0:
            _swap(x, l, mid)
        if compare(x[r], x[mid], cnt) < 0:
            _swap(x, mid, r)
            if compare(x[mid], x[l], cnt) < 0:
                _swap(x, l, mid)
        if m == 3:
            return
        v = x[mid]
        _swap(x, mid, l + 1)
        i = l + 1
        j = r
        while True:
            i += 1
            while compare(x[i], v, cnt) < 0:
                i += 1
            j -= 1
            while compare(x[j], v, cnt) > 0:
                j -= 1
            if i >= j:
                break
            _swap(x, i, j)
        _swap(x, l + 1, j)
        cnt[SPART] += 1
        cnt[LSUM] += m
        if j == k:
            return
        if k < j:
            r = j - 1
        else:
            l = j + 1
        randomize = r - l + 1 > shrink * m


def riselect(
    x, k: int, l: int = 1, r: int | None = None, *,
    cfg: RiConfig | None = None,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
    counters: RunCounters | None = None,
) -> None:
    """Quickselect with median-of-3 pivots; 1-based inclusive indices."""
    n = len(x)
    r = n if r is None else r
    check_ranks(n, l, k, r)
    cfg = cfg or RiConfig()
    rng = rng if rng is not None else np.random.default_rng(seed)
    arr = as_kernel_array(x)
    cnt = new_counter_array()
    _riselect(arr, l - 1, r - 1, k - 1, cfg.shrink_factor, rng, cnt)
    write_back(x, arr)
    if counters is not None:
        counters.update(RunCounters.from_array(cnt))
