"""Sample size and gap rules, pivot ranks and in-place sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from ._jit import jit
from .partition import _swap

_EPS = 2.220446049250313e-16


class Variant(IntEnum):
    FR = 0
    MEHLHORN = 1
    GENERALIZED = 2
    FLR75A = 3
    REISCHUK = 4
    REISCHUK_SPLIT = 5


# layout of the float64 parameter vector handed to the kernels
P_VARIANT, P_ALPHA, P_BETA, P_THETA, P_EPS_L, P_EPS, P_EPS_S, P_EPS_G, P_NCUT, P_RESET = range(10)


@dataclass(frozen=True)
class SampleStrategy:
    variant: Variant = Variant.FR
    alpha: float = 0.5
    beta: float = 0.25
    theta: float = 1.0
    eps_l: float = 1.0
    eps: float = 0.375
    eps_s: float = 0.5
    eps_g: float = 0.4375
    n_cut: int = 600
    single_pivot_reset: bool = True

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.n_cut < 1:
            raise ValueError("n_cut must be at least 1")
        v = self.variant
        if v == Variant.MEHLHORN and self.theta <= 0:
            raise ValueError("theta must be positive")
        if v == Variant.GENERALIZED and self.eps_l < 1:
            raise ValueError("eps_l must be >= 1")
        if v == Variant.REISCHUK:
            if not 0 < self.eps < self.eps_s < 1:
                raise ValueError("need 0 < eps < eps_s < 1")
            if max(1 + (self.eps - self.eps_s) / 2, self.eps_s) >= 1:
                raise ValueError("eta must be below 1")
        if v == Variant.REISCHUK_SPLIT:
            if not (0 < self.eps_s < 1 and 0 < self.eps_g < 1):
                raise ValueError("eps_s and eps_g must lie in (0, 1)")
            if 2 * self.eps_g - self.eps_s <= 0:
                raise ValueError("need 2*eps_g - eps_s > 0")
            if max(1 + self.eps_g - self.eps_s, self.eps_s) >= 1:
                raise ValueError("eta must be below 1")

    @property
    def eta(self) -> float | None:
        """Growth exponent of the surviving subproblem for the power-law rules."""
        if self.variant == Variant.REISCHUK:
            return max(1 + (self.eps - self.eps_s) / 2, self.eps_s)
        if self.variant == Variant.REISCHUK_SPLIT:
            return max(1 + self.eps_g - self.eps_s, self.eps_s)
        return None

    def params(self) -> np.ndarray:
        return np.array(
            [
                float(self.variant), self.alpha, self.beta, self.theta, self.eps_l,
                self.eps, self.eps_s, self.eps_g, float(self.n_cut), float(self.single_pivot_reset),
            ],
            dtype=np.float64,
        )


SCHEMES = {
    "fr": Variant.FR,
    "mehlhorn": Variant.MEHLHORN,
    "gen": Variant.GENERALIZED,
    "flr75a": Variant.FLR75A,
    "reischuk": Variant.REISCHUK,
    "reischuk-split": Variant.REISCHUK_SPLIT,
}


@jit
def ceil_guarded(t):
    """Ceiling that treats values within a few ulps above an integer as that integer."""
    f = math.floor(t)
    if t - f <= 4.0 * _EPS * max(1.0, abs(t)):
        return int(f)
    return int(f) + 1


@jit
def _f_fr(n):
    return n ** (2.0 / 3.0) * math.log(n) ** (1.0 / 3.0)


def f_fr(n: int) -> float:
    if n < 2:
        raise ValueError("f_fr needs n >= 2")
    return _f_fr(float(n))


@jit
def _sample_and_gap(n, prm):
    """(s, g) for a segment of n >= 2 elements."""
    variant = int(prm[P_VARIANT])
    alpha = prm[P_ALPHA]
    beta = prm[P_BETA]
    nf = float(n)
    ln = math.log(nf)
    if variant == 0:
        size = _f_fr(nf)
    elif variant == 1:
        size = _f_fr(nf)
    elif variant == 2:
        size = nf ** (2.0 / 3.0) * ln ** (prm[P_EPS_L] / 3.0)
    elif variant == 3:
        size = nf ** (2.0 / 3.0)
    else:
        size = nf ** prm[P_EPS_S]
    s = min(ceil_guarded(alpha * size), n - 1)
    s = max(s, 1)
    sf = float(s)
    if variant == 1:
        # ln(theta s) is negative for tiny samples; floor it at ln 2
        g = math.sqrt(beta * sf * math.log(max(prm[P_THETA] * sf, 2.0)))
    elif variant == 2:
        g = math.sqrt(beta * sf * ln ** prm[P_EPS_L])
    elif variant == 4:
        g = math.sqrt(beta * sf * nf ** prm[P_EPS])
    elif variant == 5:
        g = math.sqrt(beta) * nf ** prm[P_EPS_G]
    else:
        g = math.sqrt(beta * sf * ln)
    return s, g


def sample_and_gap(n: int, strategy: SampleStrategy) -> tuple[int, float]:
    if n < 2:
        raise ValueError("sampling needs n >= 2")
    s, g = _sample_and_gap(n, strategy.params())
    return int(s), float(g)


@jit
def _pivot_ranks(k, l, r, s, g, reset):
    i = k - l + 1
    m = r - l + 1
    rs = l + s - 1
    t = i * s / m
    ku_raw = ceil_guarded(l - 1 + t - g)
    kv_raw = ceil_guarded(l - 1 + t + g)
    ku = max(ku_raw, l)
    kv = min(kv_raw, rs)
    if reset:
        if ku_raw < l:
            ku = kv
        elif kv_raw > rs:
            kv = ku
    return ku, kv


def pivot_ranks(k: int, l: int, r: int, s: int, g: float, single_pivot_reset: bool = True) -> tuple[int, int]:
    """Ranks (1-based) of the two sample pivots bracketing rank k."""
    if not l <= k <= r:
        raise ValueError("need l <= k <= r")
    ku, kv = _pivot_ranks(k, l, r, s, g, single_pivot_reset)
    return int(ku), int(kv)


@jit
def _place_sample(x, l, r, s, rng):
    for i in range(l, l + s):
        _swap(x, i, i + rng.integers(0, r - i + 1))


def place_sample(x, l: int, r: int, s: int, rng: np.random.Generator) -> None:
    """Move a uniform random s-subset of x[l:r] to x[l:l+s-1] (partial Fisher-Yates)."""
    if not 1 <= s <= r - l + 1:
        raise ValueError("need 1 <= s <= r - l + 1")
    _place_sample(x, l - 1, r - 1, s, rng)
