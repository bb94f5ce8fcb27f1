# -*- coding: utf-8 -*-

"""
    groupiepy.rng
    ~~~~~~~~~~~~~

    Counter-based randomness. Every random number used by the generators is
    a pure function of a 64-bit key and an integer index, computed with the
    splitmix64 finaliser::

        z = key + (index + 1) * 0x9E3779B97F4A7C15          (mod 2**64)
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9            (mod 2**64)
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB            (mod 2**64)
        z = z ^ (z >> 31)

    so a draw never depends on the order in which draws are made.
"""

from __future__ import absolute_import

import numpy as np

from .exc import ParameterError

MASK64 = (1 << 64) - 1

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB

# separates the graph draw stream from trial seed derivation
GRAPH_STREAM = 0x6A09E667F3BCC909

_INV_2_53 = 1.0 / (1 << 53)


def check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Seed must be an integer, got %r' % (seed,))
    seed = int(seed)
    if not 0 <= seed <= MASK64:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'Seed must be a 64-bit unsigned integer')
    return seed


def mix64(x):
    """splitmix64 finaliser on a Python integer."""
    z = x & MASK64
    z = ((z ^ (z >> 30)) * MIX_MULT_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MULT_2) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed, index):
    """Seed of sub-stream `index` of `seed` (trial seeds, graph keys)."""
    return mix64((seed + (index + 1) * GOLDEN_GAMMA) & MASK64)


def graph_key(seed):
    return derive_seed(seed ^ GRAPH_STREAM, 0)


def mix64_array(key, index):
    """Vectorised `derive_seed(key, index)` over an uint64 index array."""
    index = np.asarray(index, dtype=np.uint64)
    with np.errstate(over='ignore'):
        z = (index + np.uint64(1)) * np.uint64(GOLDEN_GAMMA)
        z += np.uint64(key)
        z ^= z >> np.uint64(30)
        z *= np.uint64(MIX_MULT_1)
        z ^= z >> np.uint64(27)
        z *= np.uint64(MIX_MULT_2)
        z ^= z >> np.uint64(31)
    return z


def uniform_array(key, index):
    """Uniform doubles in [0, 1) keyed by (key, index)."""
    z = mix64_array(key, index)
    return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def open_uniform_array(key, index):
    """Uniform doubles in (0, 1], safe to pass to log."""
    z = mix64_array(key, index)
    return ((z >> np.uint64(11)).astype(np.float64) + 1.0) * _INV_2_53
