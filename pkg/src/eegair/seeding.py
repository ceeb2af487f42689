"""Deterministic seed derivation.

A single global seed is fanned out to per-stage child seeds through a
splitmix64 step keyed by a stage label, so any stage of a run can be
re-executed in isolation with the same randomness it saw in the full run.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1


def _splitmix64(state: int) -> int:
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def child_seed(seed: int, label: str) -> int:
    """Derive a reproducible child seed from ``seed`` and a stage label."""
    state = seed & _MASK
    for byte in label.encode("utf-8"):
        state = _splitmix64(state ^ byte)
    return _splitmix64(state) & 0x7FFFFFFF


def rng_for(seed: int, label: str) -> np.random.Generator:
    return np.random.default_rng(child_seed(seed, label))
