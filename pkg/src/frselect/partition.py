"""In-place partition schemes.

Kernels (leading underscore) are 0-based and jitted; the public wrappers
take 1-based indices and an optional :class:`RunCounters`.

Strict schemes ``a``-``d`` put every element equal to a pivot into that
pivot's block.  The poor man's schemes ``e``-``g`` skip equality
bookkeeping, so their blocks only satisfy weak inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._jit import jit
from .core import PartitionBounds, RunCounters, as_kernel_array, compare, new_counter_array, write_back


@jit
def _swap(x, i, j):
    t = x[i]
    x[i] = x[j]
    x[j] = t


@jit
def _vswap(x, a, b, c):
    # exchange x[a:b] with x[b+1:c]; only min(len) leading/trailing items move
    d = min(b + 1 - a, c - b)
    for t in range(d):
        _swap(x, a + t, c - d + 1 + t)


# ---------------------------------------------------------------- ternary


@jit
def _ternary_scan(x, v, lbar, p, i, j, q, rbar, cnt):
    """Scan loop and cleanup of the ternary scheme; returns (a, d)."""
    while True:
        i += 1
        ci = compare(x[i], v, cnt)
        while ci < 0:
            i += 1
            ci = compare(x[i], v, cnt)
        j -= 1
        cj = compare(x[j], v, cnt)
        while cj > 0:
            j -= 1
            cj = compare(x[j], v, cnt)
        if i < j:
            _swap(x, i, j)
            if cj == 0:
                _swap(x, i, p)
                p += 1
            if ci == 0:
                _swap(x, j, q)
                q -= 1
            continue
        if i == j:
            i += 1
            j -= 1
        break
    _vswap(x, lbar, p - 1, j)
    _vswap(x, i, q, rbar)
    return lbar + j - p + 1, rbar - q + i - 1


@jit
def _ternary_a(x, l, r, k, cnt):
    # requires l < r
    v = x[k]
    _swap(x, l, k)
    lbar = l
    rbar = r
    c = compare(v, x[r], cnt)
    if c < 0:
        rbar = r - 1
    elif c > 0:
        _swap(x, l, r)
        lbar = l + 1
    return _ternary_scan(x, v, lbar, l + 1, l, r, r - 1, rbar, cnt)


# --------------------------------------------------------------- quintary


@jit
def _prepare_quintary(x, r, rs, kum, kup, kvm, kvp):
    """Move the sample's pivot blocks around the unexamined middle.

    Returns (lbar, pbar, p, qbar, rbar) where p is the first unexamined slot.
    """
    lbar = kum
    pbar = kup + 1
    rbar = r - rs + kvp
    qbar = rbar - kvp + kvm - 1
    _vswap(x, kvp + 1, rs, r)
    _vswap(x, kvm, kvp, rbar)
    return lbar, pbar, kvm, qbar, rbar


@jit
def _quintary_b(x, lbar, pbar, p, qbar, rbar, u, v, cnt):
    q = qbar
    i = p - 1
    j = q + 1
    while True:
        # raise i until x_i >= v, filing elements below v on the way
        while True:
            i += 1
            ci = compare(x[i], v, cnt)
            if ci >= 0:
                break
            cu = compare(x[i], u, cnt)
            if cu < 0:
                continue
            _swap(x, i, p)
            if cu == 0:
                _swap(x, p, pbar)
                pbar += 1
            p += 1
        # lower j until x_j < v
        while True:
            j -= 1
            cj = compare(x[j], v, cnt)
            if cj > 0:
                continue
            if cj == 0:
                _swap(x, j, q)
                q -= 1
                continue
            break
        if i >= j:
            break
        _swap(x, i, j)
        cu = compare(x[i], u, cnt)
        if cu == 0:
            _swap(x, i, p)
            _swap(x, p, pbar)
            pbar += 1
            p += 1
        elif cu > 0:
            _swap(x, i, p)
            p += 1
        if ci == 0:
            _swap(x, j, q)
            q -= 1
    a = lbar + j - p + 1
    b = pbar - p + i
    _vswap(x, pbar, p - 1, j)
    _vswap(x, lbar, pbar - 1, b - 1)
    _vswap(x, i, q, rbar)
    return a, b, j, rbar - q + i - 1


@jit
def _quintary_c(x, lbar, pbar, kvm, qbar, rbar, u, v, cnt):
    p = pbar
    q = qbar - kvm + pbar
    i = p - 1
    j = q + 1
    # park the sample's middle block next to the v block
    _vswap(x, pbar, kvm - 1, qbar)
    while True:
        # raise i until x_i > u
        while True:
            i += 1
            ci = compare(x[i], u, cnt)
            if ci < 0:
                continue
            if ci == 0:
                _swap(x, i, p)
                p += 1
                continue
            break
        # lower j until x_j <= u
        while True:
            j -= 1
            cj = compare(x[j], u, cnt)
            if cj <= 0:
                break
            cv = compare(x[j], v, cnt)
            if cv > 0:
                continue
            _swap(x, j, q)
            if cv == 0:
                _swap(x, q, qbar)
                qbar -= 1
            q -= 1
        if i >= j:
            break
        _swap(x, i, j)
        if cj == 0:
            _swap(x, i, p)
            p += 1
        cv = compare(x[j], v, cnt)
        if cv == 0:
            _swap(x, j, q)
            _swap(x, q, qbar)
            qbar -= 1
            q -= 1
        elif cv < 0:
            _swap(x, j, q)
            q -= 1
    a = lbar + j - p + 1
    c = qbar - q + j
    d = rbar - q + i - 1
    _vswap(x, i, q, qbar)
    _vswap(x, c + 1, qbar, rbar)
    _vswap(x, lbar, p - 1, j)
    return a, i, c, d


@jit
def _quintary_d(x, lbar, pbar, p, qbar, rbar, u, v, cnt):
    # variant of b that tests i <= j instead of relying on sentinels
    q = qbar
    i = p
    j = q
    ci = 0
    while True:
        while i <= j:
            ci = compare(x[i], v, cnt)
            if ci >= 0:
                break
            cu = compare(x[i], u, cnt)
            if cu >= 0:
                _swap(x, i, p)
                if cu == 0:
                    _swap(x, p, pbar)
                    pbar += 1
                p += 1
            i += 1
        while i <= j:
            cj = compare(x[j], v, cnt)
            if cj < 0:
                break
            if cj == 0:
                _swap(x, j, q)
                q -= 1
            j -= 1
        if i >= j:
            break
        _swap(x, i, j)
        cu = compare(x[i], u, cnt)
        if cu >= 0:
            _swap(x, i, p)
            if cu == 0:
                _swap(x, p, pbar)
                pbar += 1
            p += 1
        if ci == 0:
            _swap(x, j, q)
            q -= 1
        i += 1
        j -= 1
    a = lbar + j - p + 1
    b = pbar - p + i
    _vswap(x, pbar, p - 1, j)
    _vswap(x, lbar, pbar - 1, b - 1)
    _vswap(x, i, q, rbar)
    return a, b, j, rbar - q + i - 1


# ------------------------------------------------------------- poor man's


@jit
def _binary_scan(x, v, i, j, cnt):
    while True:
        i += 1
        while compare(x[i], v, cnt) < 0:
            i += 1
        j -= 1
        while compare(x[j], v, cnt) > 0:
            j -= 1
        if i < j:
            _swap(x, i, j)
            continue
        if i == j:
            i += 1
            j -= 1
        return i, j


@jit
def _binary_e(x, l, r, k, cnt):
    # requires l < r; returns (a, d)
    v = x[k]
    _swap(x, l, k)
    phat = l
    if compare(v, x[r], cnt) > 0:
        _swap(x, l, r)
        phat = r
    i, j = _binary_scan(x, v, l, r, cnt)
    if phat != r:
        _swap(x, phat, j)
        return j, i - 1
    _swap(x, i, phat)
    return j + 1, i


@jit
def _pm_equal(x, lbar, p, rbar, v, cnt):
    # both pivot copies equal: binary scan of the unexamined block only
    i, j = _binary_scan(x, v, p - 1, rbar, cnt)
    a = lbar + j - p + 1
    _vswap(x, lbar, p - 1, j)
    _swap(x, i, rbar)
    return a, i


@jit
def _pm_quintary_f(x, lbar, p, rbar, u, v, cnt):
    i = p - 1
    j = rbar
    while True:
        while True:
            i += 1
            if compare(x[i], v, cnt) >= 0:
                break
            if compare(x[i], u, cnt) <= 0:
                continue
            _swap(x, i, p)
            p += 1
        j -= 1
        while compare(x[j], v, cnt) >= 0:
            j -= 1
        if i >= j:
            break
        _swap(x, i, j)
        if compare(x[i], u, cnt) > 0:
            _swap(x, i, p)
            p += 1
    a = lbar + i - p
    _vswap(x, lbar + 1, p - 1, j)
    _swap(x, lbar, a)
    _swap(x, j + 1, rbar)
    return a, a + 1, j, j + 1


@jit
def _pm_quintary_g(x, lbar, p, rs, r, rbar, u, v, cnt):
    q = r - rs + lbar
    i = lbar
    j = q + 1
    _vswap(x, lbar + 1, p - 1, rbar - 1)
    while True:
        i += 1
        while compare(x[i], u, cnt) <= 0:
            i += 1
        while True:
            j -= 1
            if compare(x[j], u, cnt) <= 0:
                break
            if compare(x[j], v, cnt) >= 0:
                continue
            _swap(x, j, q)
            q -= 1
        if i >= j:
            break
        _swap(x, i, j)
        if compare(x[j], v, cnt) < 0:
            _swap(x, j, q)
            q -= 1
    d = rbar - q + j
    _swap(x, lbar, j)
    _vswap(x, i, q, rbar - 1)
    _swap(x, d, rbar)
    return j, j + 1, d - 1, d


# ---------------------------------------------------------------- wrappers


def _finish(cnt, counters: RunCounters | None) -> None:
    if counters is not None:
        counters.update(RunCounters.from_array(cnt))


def swap(x, i: int, j: int) -> None:
    arr = as_kernel_array(x)
    _swap(arr, i - 1, j - 1)
    write_back(x, arr)


def vector_swap(x, a: int, b: int, c: int) -> None:
    """Exchange x[a:b] with x[b+1:c] (1-based, inclusive), moving min length items."""
    assert a <= b + 1 and b <= c, "vector_swap needs a <= b+1 <= c+1"
    assert a >= 1 and c <= len(x)
    arr = as_kernel_array(x)
    _vswap(arr, a - 1, b - 1, c - 1)
    write_back(x, arr)


def ternary_a(x, l: int, r: int, k: int, counters: RunCounters | None = None) -> PartitionBounds:
    """Three-way partition of x[l:r] around v = x_k (strict blocks)."""
    assert 1 <= l <= k <= r <= len(x)
    if l == r:
        return PartitionBounds.ternary(l, l)
    cnt = new_counter_array()
    a, d = _ternary_a(x, l - 1, r - 1, k - 1, cnt)
    _finish(cnt, counters)
    return PartitionBounds.ternary(a + 1, d + 1)


def binary_e(x, l: int, r: int, k: int, counters: RunCounters | None = None) -> PartitionBounds:
    """Binary partition of x[l:r] around v = x_k (weak outer blocks)."""
    assert 1 <= l <= k <= r <= len(x)
    if l == r:
        return PartitionBounds.ternary(l, l)
    cnt = new_counter_array()
    a, d = _binary_e(x, l - 1, r - 1, k - 1, cnt)
    _finish(cnt, counters)
    return PartitionBounds.ternary(a + 1, d + 1)


@dataclass
class QuintaryState:
    """Block boundaries after the sample blocks have been moved (1-based).

    ``p`` is the first unexamined slot; ``i`` and ``j`` are the cursors a
    scheme starts from.
    """

    l_bar: int
    p_bar: int
    p: int
    q: int
    q_bar: int
    r_bar: int
    i: int
    j: int


def prepare_quintary(
    x, l: int, r: int, r_s: int, ku_minus: int, ku_plus: int, kv_minus: int, kv_plus: int
) -> QuintaryState:
    assert l <= ku_minus <= ku_plus < kv_minus <= kv_plus <= r_s <= r
    lbar, pbar, p, qbar, rbar = _prepare_quintary(
        x, r - 1, r_s - 1, ku_minus - 1, ku_plus - 1, kv_minus - 1, kv_plus - 1
    )
    return QuintaryState(lbar + 1, pbar + 1, p + 1, qbar + 1, qbar + 1, rbar + 1, p, qbar + 2)


def _quintary(kernel, x, st: QuintaryState, u, v, counters, third: int) -> PartitionBounds:
    assert u < v
    cnt = new_counter_array()
    a, b, c, d = kernel(x, st.l_bar - 1, st.p_bar - 1, third - 1, st.q_bar - 1, st.r_bar - 1, u, v, cnt)
    _finish(cnt, counters)
    return PartitionBounds(a + 1, b + 1, c + 1, d + 1)


def quintary_b(x, state: QuintaryState, u, v, counters: RunCounters | None = None) -> PartitionBounds:
    """Five-way partition comparing each new element to v first."""
    return _quintary(_quintary_b, x, state, u, v, counters, state.p)


def quintary_c(x, state: QuintaryState, u, v, counters: RunCounters | None = None) -> PartitionBounds:
    """Mirror of :func:`quintary_b` comparing each new element to u first."""
    return _quintary(_quintary_c, x, state, u, v, counters, state.p)


def quintary_d(x, state: QuintaryState, u, v, counters: RunCounters | None = None) -> PartitionBounds:
    """Same result as :func:`quintary_b`, with cursor tests instead of sentinels."""
    return _quintary(_quintary_d, x, state, u, v, counters, state.p)


def prepare_poor_mans(x, r: int, r_s: int, k_u: int, k_v: int) -> tuple[int, int, int]:
    """Rearrange a sample with u at k_u and v at k_v; returns (l_bar, p, r_bar)."""
    assert k_u < k_v <= r_s <= r
    p = k_v - 1
    rbar = r - r_s + p
    _vswap(x, p + 1, r_s - 1, r - 1)
    _swap(x, p, rbar)
    return k_u, k_v, rbar + 1


def pm_quintary_f(x, l_bar: int, p: int, r_bar: int, u, v, counters: RunCounters | None = None) -> PartitionBounds:
    assert u < v
    cnt = new_counter_array()
    a, b, c, d = _pm_quintary_f(x, l_bar - 1, p - 1, r_bar - 1, u, v, cnt)
    _finish(cnt, counters)
    return PartitionBounds(a + 1, b + 1, c + 1, d + 1)


def pm_quintary_g(
    x, l_bar: int, p: int, r_bar: int, u, v, counters: RunCounters | None = None, *, r_s: int, r: int
) -> PartitionBounds:
    """Mirror of :func:`pm_quintary_f`; also needs r and r_s to size the scan."""
    assert u < v
    cnt = new_counter_array()
    a, b, c, d = _pm_quintary_g(x, l_bar - 1, p - 1, r_s - 1, r - 1, r_bar - 1, u, v, cnt)
    _finish(cnt, counters)
    return PartitionBounds(a + 1, b + 1, c + 1, d + 1)
