"""Deterministic seed derivation for all random streams.

Every random draw in this package comes from a counter-based Philox
generator whose 128-bit key is a pure function of user-supplied seeds,
so results are reproducible across runs, platforms, and worker counts.

Derivation scheme (documented so external tools can reproduce streams):

* ``mix64(x)`` is the splitmix64 output function applied to
  ``x + GOLDEN`` (all arithmetic mod 2**64).
* ``derive_seed(base, *parts)`` folds integer components:
  ``s = mix64(base)``, then for each part ``p``:
  ``s = mix64(s XOR (p * GOLDEN mod 2**64))``.
* A stream with 64-bit sub-seed ``s`` and counter ``c`` uses the Philox
  key ``s + (c << 64)`` (``c`` occupies the high key word).

Domain constants keep independent uses of the same user seed (graph
generation, sampling chunks, per-graph embedding seeds, benchmarks)
on disjoint streams.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

DOMAIN_ER = 1
DOMAIN_STREAM = 2
DOMAIN_EMBED = 3
DOMAIN_BENCH = 4


def mix64(x: int) -> int:
    """splitmix64 step: advance by the golden ratio and finalize."""
    z = (x + GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(base: int, *parts: int) -> int:
    """Fold ``base`` and integer components into a 64-bit sub-seed."""
    s = mix64(base & _MASK64)
    for p in parts:
        s = mix64(s ^ ((p * GOLDEN) & _MASK64))
    return s


def philox(sub_seed: int, counter: int = 0) -> np.random.Generator:
    """Generator for the stream addressed by (sub_seed, counter)."""
    key = (sub_seed & _MASK64) | ((counter & _MASK64) << 64)
    return np.random.Generator(np.random.Philox(key=key))
