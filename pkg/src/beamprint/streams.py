"""Counter-based random streams keyed by integers.

Every random draw in the package flows through here: a stream is a
``numpy.random.Generator`` over a Philox bit generator whose 128-bit key is
derived from the caller's key tuple. Streams are stateless per key, so any
worker can regenerate any stream independently and parallel runs stay
bit-identical to serial ones.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

# Purpose tags keep independent uses of the same seed on disjoint keys.
TAG_SCENE = 1
TAG_NOISE_TRAIN = 2
TAG_NOISE_TEST = 3
TAG_INIT = 4
TAG_DROPOUT = 5
TAG_SHUFFLE = 6


def mix64(*parts: int) -> int:
    """Fold integers into one 64-bit value (splitmix64 finalizer per step)."""
    h = 0x9E3779B97F4A7C15
    for p in parts:
        h = (h ^ (p & MASK64)) * 0xBF58476D1CE4E5B9 & MASK64
        h = (h ^ (h >> 27)) * 0x94D049BB133111EB & MASK64
        h ^= h >> 31
    return h


def stream(*key: int) -> np.random.Generator:
    """Deterministic generator for a key tuple."""
    k0 = mix64(*key)
    k1 = mix64(k0, *key)
    return np.random.Generator(np.random.Philox(key=np.array([k0, k1], dtype=np.uint64)))


def derive_seed(master_seed: int, purpose: str) -> int:
    """Fan a master seed out to an independent per-purpose seed."""
    return mix64(master_seed, *purpose.encode("utf-8"))


def position_key(x: float, y: float) -> int:
    """Stable 64-bit identity of a position from its float32 coordinates.

    Unique for distinct (float32) positions, and independent of where the
    position sits in a dataset, so reordering a dataset cannot change any
    per-position random stream.
    """
    xb = int(np.float32(x).view(np.uint32))
    yb = int(np.float32(y).view(np.uint32))
    return (xb << 32) | yb
