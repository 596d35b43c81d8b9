"""Benchmark input families."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KINDS = ("random", "onezero", "sorted", "rotated", "organpipe", "m3killer", "twofaced")


@dataclass(frozen=True)
class InputSpec:
    kind: str
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown input kind {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.kind in ("m3killer", "twofaced") and self.n % 4:
            raise ValueError(f"{self.kind} needs n divisible by 4")
        if self.kind == "organpipe" and self.n % 2:
            raise ValueError("organpipe needs even n")


def m3killer(n: int) -> np.ndarray:
    """Median-of-3 killer permutation of 1..n, n = 4j, tuned for the middle index k = n/2."""
    if n % 4:
        raise ValueError("m3killer needs n divisible by 4")
    k = n // 2
    pos = np.arange(1, n + 1)
    out = pos.copy()
    head = pos[: k - 1]
    out[: k - 1] = np.where(head % 2 == 1, head, k + head - 1)
    mid = pos[k - 1 : 2 * k - 2]
    out[k - 1 : 2 * k - 2] = 2 * (mid - k + 1)
    return out


def _twofaced(n: int, rng: np.random.Generator) -> np.ndarray:
    x = m3killer(n)
    lg = n.bit_length() - 1
    # both windows are inclusive, 1-based
    for lo, hi in ((4 * lg, n // 2 - 1), (n // 2 + 4 * lg - 1, n - 2)):
        if lo <= hi:
            x[lo - 1 : hi] = rng.permutation(x[lo - 1 : hi])
    return x


def generate(spec: InputSpec, dtype=np.int64, rng: np.random.Generator | None = None) -> np.ndarray:
    """Build the input sequence; seeded kinds draw from ``rng`` or a generator seeded with spec.seed."""
    n = spec.n
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    if spec.kind == "random":
        x = rng.permutation(n) + 1
    elif spec.kind == "onezero":
        x = rng.permutation(np.r_[np.ones((n + 1) // 2, np.int64), np.zeros(n // 2, np.int64)])
    elif spec.kind == "sorted":
        x = np.arange(1, n + 1)
    elif spec.kind == "rotated":
        x = np.roll(np.arange(1, n + 1), -1)
    elif spec.kind == "organpipe":
        up = np.arange(1, n // 2 + 1)
        x = np.r_[up, up[::-1]]
    elif spec.kind == "m3killer":
        x = m3killer(n)
    else:
        x = _twofaced(n, rng)
    return np.ascontiguousarray(x, dtype=dtype)
