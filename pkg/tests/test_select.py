import itertools
import json
import os
import subprocess
import sys
import textwrap

import numpy as np
import pytest

from frselect.core import RunCounters, check_selection, check_weak, multiset_digest
from frselect.generators import InputSpec, generate
from frselect.sampling import SampleStrategy
from frselect.select import SelectConfig, pmselect, select, select_stage, sselect


def test_distinct_median():
    x = np.array([4, 1, 5, 3, 2])
    res = select(x, 3, seed=0)
    assert x[2] == 3 and (res.k_minus, res.k_plus) == (3, 3)


def test_equal_range():
    x = np.array([2, 3, 1, 2, 1, 2])
    res = select(x, 4, seed=0)
    assert x[3] == 2 and (res.k_minus, res.k_plus) == (3, 5)
    assert check_selection(x, 4, res)


def test_list_input_is_written_back():
    x = [5, 3, 9, 1]
    select(x, 2, seed=0)
    assert x[1] == 3 and sorted(x) == [1, 3, 5, 9]


def test_subsegment_only():
    x = np.array([9, 8, 7, 3, 1, 2, 0, -1])
    res = select(x, 5, l=4, r=6, seed=0)
    assert list(x[:3]) == [9, 8, 7] and list(x[6:]) == [0, -1]
    assert x[4] == 2 and check_selection(x, 5, res, l=4, r=6)


@pytest.mark.parametrize("bad", [dict(k=0), dict(k=6), dict(k=2, l=3), dict(k=4, r=3), dict(k=2, r=9)])
def test_invalid_ranks(bad):
    with pytest.raises(ValueError):
        select(np.arange(5), **bad)


def test_sselect_single_element():
    res = sselect(np.array([3, 1, 2]), 2, l=2, r=2)
    assert (res.k_minus, res.k_plus) == (2, 2)


def test_sselect_exhaustive():
    for n in range(1, 8):
        for t in itertools.product((1, 2, 3), repeat=n):
            srt = sorted(t)
            for k in range(1, n + 1):
                x = np.array(t)
                res = sselect(x, k)
                assert x[k - 1] == srt[k - 1] and check_selection(x, k, res)


def test_sselect_cost_on_600(rng):
    total = 0
    for _ in range(200):
        x = rng.permutation(600)
        c = RunCounters()
        sselect(x, 300, counters=c)
        total += c.comparisons
    assert total / 200 < 3.5 * 600


def _small_strategies():
    return [SampleStrategy(n_cut=c) for c in (1, 3, 600)]


def test_select_exhaustive_small():
    for strat in _small_strategies():
        for n in range(1, 8):
            for t in itertools.product((1, 2, 3), repeat=n):
                srt = sorted(t)
                for k in range(1, n + 1):
                    x = np.array(t)
                    res = select(x, k, strategy=strat, seed=n * 31 + k)
                    assert x[k - 1] == srt[k - 1] and check_selection(x, k, res)
                    y = np.array(t)
                    pmselect(y, k, strategy=strat, seed=k)
                    assert y[k - 1] == srt[k - 1] and check_weak(y, k)


@pytest.mark.parametrize("n_cut", [1, 5, 600])
@pytest.mark.parametrize("reset", [True, False])
def test_select_randomized_oracle(n_cut, reset, rng):
    strat = SampleStrategy(n_cut=n_cut, single_pivot_reset=reset)
    for _ in range(300):
        n = int(rng.integers(1, 3000))
        x = rng.integers(0, int(rng.choice([2, 10, n + 1])), n).astype(np.float64)
        k = int(rng.integers(1, n + 1))
        expected = np.partition(x, k - 1)[k - 1]
        digest = multiset_digest(x)
        y = x.copy()
        res = select(x, k, strategy=strat, rng=rng)
        assert x[k - 1] == expected and check_selection(x, k, res)
        assert multiset_digest(x) == digest
        pmselect(y, k, strategy=strat, rng=rng)
        assert y[k - 1] == expected and check_weak(y, k)


def test_pmselect_duplicates():
    x = np.array([2, 1, 2, 1, 2])
    pmselect(x, 3, seed=0)
    assert x[2] == 2 and check_weak(x, 3)


def test_pmselect_distinct(rng):
    for _ in range(50):
        n = int(rng.integers(1, 5000))
        x = rng.permutation(n) + 1
        k = int(rng.integers(1, n + 1))
        pmselect(x, k, rng=rng)
        assert x[k - 1] == k


@pytest.mark.parametrize("fn", [select, pmselect])
def test_determinism(fn):
    outs = []
    for _ in range(2):
        x = generate(InputSpec("random", 50_000, seed=3), dtype=np.float64)
        c = RunCounters()
        fn(x, 25_000, seed=99, counters=c)
        outs.append((c, x.tobytes()))
    assert outs[0] == outs[1]


def test_stage_count_bounded():
    worst = 0
    for kind, n in (("random", 10**6), ("sorted", 10**6), ("onezero", 10**6), ("random", 3 * 10**6)):
        x = generate(InputSpec(kind, n, seed=1), dtype=np.float64)
        c = RunCounters()
        select(x, (n + 1) // 2, seed=1, counters=c)
        worst = max(worst, c.max_stages)
    assert worst <= 8


def test_select_stage_shrinks(rng):
    x = rng.permutation(100_000).astype(np.float64)
    l, r, c = select_stage(x, 50_000, rng=rng)
    assert l <= 50_000 <= r and r - l + 1 < 10_000
    assert np.all(x[: l - 1] <= x[l - 1 : r].min()) and np.all(x[r:] >= x[l - 1 : r].max())
    assert c > 0


def test_select_config_validation():
    SelectConfig(family="pmselect")
    with pytest.raises(ValueError):
        SelectConfig(family="quick")


def test_pure_python_mode_handles_strings():
    code = textwrap.dedent("""
        from frselect import select, pmselect
        from frselect.core import check_selection, check_weak
        import random
        rnd = random.Random(5)
        words = [rnd.choice(["pear", "fig", "kiwi", "lime", "plum"]) + str(rnd.randrange(40)) for _ in range(2000)]
        x = list(words); res = select(x, 700, seed=1, strategy=__import__("frselect").SampleStrategy(n_cut=50))
        assert x[699] == sorted(words)[699] and check_selection(x, 700, res)
        y = list(words); pmselect(y, 1500, seed=2, strategy=__import__("frselect").SampleStrategy(n_cut=50))
        assert y[1499] == sorted(words)[1499] and check_weak(y, 1500)
        print("ok")
    """)
    env = dict(os.environ, NUMBA_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, timeout=600)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "ok"


COUNTING_SCRIPT = textwrap.dedent("""
    import json, sys
    import numpy as np
    import importlib
    import frselect.core as core
    baseline, partition, selmod = (importlib.import_module("frselect." + m) for m in ("baseline", "partition", "select"))
    from frselect.core import RunCounters
    from frselect.sampling import SampleStrategy

    state = {"inside": False, "count": 0}

    class Item:
        __slots__ = ("v",)
        def __init__(self, v): self.v = v
        def _guard(self):
            if not state["inside"]:
                raise AssertionError("element compared outside the counting hook")
        def __lt__(self, o): self._guard(); return self.v < o.v
        def __gt__(self, o): self._guard(); return self.v > o.v
        def __le__(self, o): self._guard(); return self.v <= o.v
        def __ge__(self, o): self._guard(); return self.v >= o.v
        def __eq__(self, o): self._guard(); return self.v == o.v
        __hash__ = None

    original = core.compare
    def hooked(a, b, cnt):
        state["count"] += 1
        state["inside"] = True
        try:
            return original(a, b, cnt)
        finally:
            state["inside"] = False

    for mod in (partition, selmod, baseline):
        mod.compare = hooked

    rng = np.random.default_rng(7)
    out = []
    for algo in ("select", "pmselect", "riselect", "sselect"):
        for trial in range(6):
            n = int(rng.integers(50, 4000))
            vals = rng.integers(0, int(rng.choice([3, n])), n)
            x = [Item(int(v)) for v in vals]
            k = int(rng.integers(1, n + 1))
            c = RunCounters()
            state["count"] = 0
            strat = SampleStrategy(n_cut=int(rng.choice([20, 600])))
            if algo == "select":
                selmod.select(x, k, strategy=strat, seed=trial, counters=c)
            elif algo == "pmselect":
                selmod.pmselect(x, k, strategy=strat, seed=trial, counters=c)
            elif algo == "sselect":
                selmod.sselect(x, k, counters=c)
            else:
                baseline.riselect(x, k, seed=trial, counters=c)
            got = x[k - 1].v
            out.append([algo, n, state["count"], c.comparisons, int(got == int(np.sort(vals)[k - 1]))])
    json.dump(out, sys.stdout)
""")


def test_comparison_count_cross_check():
    env = dict(os.environ, NUMBA_DISABLE_JIT="1")
    proc = subprocess.run([sys.executable, "-c", COUNTING_SCRIPT], env=env, capture_output=True, text=True, timeout=900)
    assert proc.returncode == 0, proc.stderr[-3000:]
    rows = json.loads(proc.stdout)
    assert len(rows) == 24
    for algo, n, independent, reported, correct in rows:
        assert independent == reported > 0, (algo, n)
        assert correct, (algo, n)
