"""Input validation helpers used by the estimators and container types."""

from __future__ import annotations

import numpy as np


def as_float_array(x, name: str, ndim: int | None = None, dtype=np.float64) -> np.ndarray:
    """Coerce ``x`` to a float ndarray, optionally enforcing dimensionality."""
    arr = np.asarray(x, dtype=dtype)
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_positive(value, name: str):
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value!r}")
    return value


def check_channel_match(n_data: int, n_expected: int, what: str):
    if n_data != n_expected:
        raise ValueError(
            f"channel dimension mismatch for {what}: data has {n_data}, expected {n_expected}"
        )


def check_in_range(value, lo, hi, name: str):
    if not (lo <= value <= hi):
        raise ValueError(f"{name} must be in [{lo}, {hi}], got {value!r}")
    return value
