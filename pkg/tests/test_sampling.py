import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import chi2

from frselect.sampling import (
    SampleStrategy, Variant, ceil_guarded, f_fr, pivot_ranks, place_sample, sample_and_gap,
)

ALL_VARIANTS = [
    SampleStrategy(),
    SampleStrategy(variant=Variant.MEHLHORN, theta=2.0),
    SampleStrategy(variant=Variant.GENERALIZED, eps_l=1.5),
    SampleStrategy(variant=Variant.FLR75A, alpha=1.0),
    SampleStrategy(variant=Variant.REISCHUK, eps=0.25, eps_s=0.6),
    SampleStrategy(variant=Variant.REISCHUK_SPLIT, eps_s=0.6, eps_g=0.35),
]


@pytest.mark.parametrize("n, expected", [(10**3, 190.449), (10**6, 23995.0), (10**8, 568986)])
def test_f_fr_table_values(n, expected):
    assert f_fr(n) == pytest.approx(expected, rel=1e-5)


def test_f_fr_rejects_small():
    with pytest.raises(ValueError):
        f_fr(1)


def test_fr_sample_at_million():
    s, g = sample_and_gap(10**6, SampleStrategy())
    assert s == 11998
    assert g == pytest.approx(math.sqrt(0.25 * 11998 * math.log(10**6)))
    assert g == pytest.approx(203.6, abs=0.05)


def test_fr_sample_clamped_for_tiny_n():
    s, g = sample_and_gap(3, SampleStrategy())
    assert s == 2 and g > 0


def test_flr75a_sample():
    s, _ = sample_and_gap(10**6, SampleStrategy(variant=Variant.FLR75A, alpha=1.0))
    assert s == 10_000


def test_ceil_guard_absorbs_rounding():
    assert ceil_guarded((10**6) ** (2 / 3)) == 10_000
    assert ceil_guarded(2.0) == 2 and ceil_guarded(2.5) == 3


@pytest.mark.parametrize("strategy", ALL_VARIANTS, ids=lambda s: s.variant.name)
@settings(max_examples=200, deadline=None)
@given(n=st.integers(2, 10**9))
def test_sample_and_gap_ranges(strategy, n):
    s, g = sample_and_gap(n, strategy)
    assert 1 <= s <= n - 1 and g > 0


@settings(max_examples=200, deadline=None)
@given(n=st.integers(3, 10**9))
def test_fr_design_probability(n):
    s, g = sample_and_gap(n, SampleStrategy())
    assert g * g / s == pytest.approx(0.25 * math.log(n), rel=1e-12)


def test_reischuk_split_gap():
    strat = SampleStrategy(variant=Variant.REISCHUK_SPLIT, beta=0.5, eps_s=0.6, eps_g=0.35)
    _, g = sample_and_gap(10**5, strat)
    assert g == pytest.approx(math.sqrt(0.5) * (10**5) ** 0.35)


@pytest.mark.parametrize("kwargs", [
    dict(alpha=0),
    dict(beta=-1),
    dict(n_cut=0),
    dict(variant=Variant.REISCHUK, eps=0.6, eps_s=0.5),
    dict(variant=Variant.REISCHUK_SPLIT, eps_s=0.8, eps_g=0.3),
    dict(variant=Variant.GENERALIZED, eps_l=0.5),
])
def test_strategy_validation(kwargs):
    with pytest.raises(ValueError):
        SampleStrategy(**kwargs)


def test_eta():
    assert SampleStrategy(variant=Variant.REISCHUK, eps=0.25, eps_s=0.6).eta == pytest.approx(0.825)
    assert SampleStrategy().eta is None


# ------------------------------------------------------------- pivot ranks


def test_pivot_ranks_example():
    assert pivot_ranks(500, 1, 1000, 96, 12.876) == (36, 61)


def test_pivot_ranks_clamps():
    ku, kv = pivot_ranks(1, 1, 1000, 96, 12.876, single_pivot_reset=False)
    assert ku == 1 and kv > 1
    ku, kv = pivot_ranks(1000, 1, 1000, 96, 12.876, single_pivot_reset=False)
    assert kv == 96 and ku < 96


def test_pivot_ranks_single_pivot_reset():
    ku, kv = pivot_ranks(1, 1, 1000, 96, 12.876)
    assert ku == kv == 13
    ku, kv = pivot_ranks(1000, 1, 1000, 96, 12.876)
    assert ku == kv == 84


segments = st.tuples(st.integers(1, 50), st.integers(2, 5000)).flatmap(
    lambda lm: st.tuples(st.just(lm[0]), st.just(lm[0] + lm[1] - 1), st.integers(1, lm[1] - 1),
                         st.floats(0.01, 200.0))
)


@settings(max_examples=300, deadline=None)
@given(segments)
def test_pivot_ranks_monotone_without_reset(seg):
    l, r, s, g = seg
    prev = (l, l)
    for k in range(l, r + 1, max(1, (r - l) // 200)):
        ku, kv = pivot_ranks(k, l, r, s, g, single_pivot_reset=False)
        assert l <= ku and kv <= l + s - 1
        assert ku >= prev[0] and kv >= prev[1]
        prev = (ku, kv)


@settings(max_examples=300, deadline=None)
@given(segments)
def test_pivot_ranks_reset_only_changes_clamped_side(seg):
    l, r, s, g = seg
    for k in range(l, r + 1, max(1, (r - l) // 200)):
        plain = pivot_ranks(k, l, r, s, g, single_pivot_reset=False)
        reset = pivot_ranks(k, l, r, s, g)
        assert reset == plain or reset in ((plain[1], plain[1]), (plain[0], plain[0]))


# ------------------------------------------------------------ place sample


def test_place_sample_golden():
    x = np.arange(6)
    place_sample(x, 1, 6, 3, np.random.default_rng(0))
    assert list(x) == [5, 4, 1, 3, 2, 0]


def test_place_sample_full_shuffle_is_permutation(rng):
    x = np.arange(20)
    place_sample(x, 1, 20, 20, rng)
    assert sorted(x) == list(range(20))


def test_place_sample_leaves_outside_untouched(rng):
    for _ in range(200):
        n = int(rng.integers(2, 40))
        l = int(rng.integers(1, n + 1))
        r = int(rng.integers(l, n + 1))
        s = int(rng.integers(1, r - l + 2))
        x = np.arange(n)
        place_sample(x, l, r, s, rng)
        assert np.array_equal(x[: l - 1], np.arange(l - 1)) and np.array_equal(x[r:], np.arange(r, n))
        assert sorted(x[l - 1 : r]) == list(range(l - 1, r))


def test_place_sample_uniform_subsets():
    rng = np.random.default_rng(2024)
    trials = 100_000
    subsets = {c: i for i, c in enumerate(itertools.combinations(range(5), 2))}
    counts = np.zeros(len(subsets))
    base = np.arange(5)
    for _ in range(trials):
        x = base.copy()
        place_sample(x, 1, 5, 2, rng)
        counts[subsets[tuple(sorted(x[:2]))]] += 1
    freq = counts / trials
    sigma = math.sqrt(0.1 * 0.9 / trials)
    assert np.all(np.abs(freq - 0.1) <= 3 * sigma)
    assert chi2.sf(((counts - trials / 10) ** 2 / (trials / 10)).sum(), df=9) > 1e-3


def test_place_sample_rejects_bad_size(rng):
    with pytest.raises(ValueError):
        place_sample(np.arange(4), 1, 4, 5, rng)
