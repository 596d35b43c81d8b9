"""Compilation switch for the selection kernels.

Kernels are written in the numba-compatible subset of Python.  With
``NUMBA_DISABLE_JIT=1`` they run as plain Python and then accept any
indexable sequence of mutually comparable values.
"""

from numba import config, njit

JIT_ENABLED = not config.DISABLE_JIT


def jit(fn):
    return njit(cache=True)(fn)


def jit_recursive(fn):
    # numba's on-disk cache cannot relink self-recursive functions reliably
    return njit(cache=False)(fn)
