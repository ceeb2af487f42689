"""Signal containers shared by every stage of the decoding chain.

All types are immutable after construction and validate their invariants in
``__post_init__``; operations elsewhere in the package return new objects
rather than mutating these, so instances are safe to share across threads.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

N_CLASSES = 26
LETTERS = string.ascii_uppercase


@dataclass(frozen=True)
class ClassLabel:
    """One of the 26 uppercase-letter classes, index 0..25 <-> 'A'..'Z'."""

    index: int

    def __post_init__(self):
        if not 0 <= self.index < N_CLASSES:
            raise ValueError(f"class index must be in 0..25, got {self.index}")

    @property
    def letter(self) -> str:
        return LETTERS[self.index]

    @classmethod
    def from_letter(cls, letter: str) -> "ClassLabel":
        if len(letter) != 1 or letter not in LETTERS:
            raise ValueError(f"letter must be one of 'A'..'Z', got {letter!r}")
        return cls(LETTERS.index(letter))


@dataclass(frozen=True)
class Montage:
    """Electrode geometry: 10-20 names plus spherical angles per channel.

    ``theta`` is elevation from the vertex in radians (0 at Cz), ``phi`` the
    azimuth in radians in [0, 2*pi).  ``radius`` is the nominal head radius in
    meters; the harmonic bases depend only on the angles, so it is carried
    for completeness.
    """

    channel_names: tuple
    theta: np.ndarray
    phi: np.ndarray
    radius: float = 0.09

    def __post_init__(self):
        names = tuple(self.channel_names)
        object.__setattr__(self, "channel_names", names)
        theta = np.asarray(self.theta, dtype=np.float64)
        phi = np.mod(np.asarray(self.phi, dtype=np.float64), 2 * np.pi)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)
        if len(names) < 1:
            raise ValueError("montage needs at least one channel")
        if len(set(names)) != len(names):
            raise ValueError("channel names must be unique")
        if theta.shape != (len(names),) or phi.shape != (len(names),):
            raise ValueError("theta/phi must have one entry per channel")
        if np.any(theta < 0) or np.any(theta > np.pi):
            raise ValueError("theta must lie in [0, pi]")
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    @property
    def n_channels(self) -> int:
        return len(self.channel_names)


@dataclass(frozen=True)
class Recording:
    """Continuous multichannel signal (channels x samples, microvolts)."""

    data: np.ndarray
    fs: float
    montage: Montage
    annotations: tuple = ()

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        object.__setattr__(self, "data", data)
        ann = tuple((int(i), int(lab)) for i, lab in self.annotations)
        object.__setattr__(self, "annotations", ann)
        if data.ndim != 2:
            raise ValueError(f"data must be channels x samples, got shape {data.shape}")
        if data.shape[0] != self.montage.n_channels:
            raise ValueError(
                f"data has {data.shape[0]} rows but montage has "
                f"{self.montage.n_channels} channels"
            )
        if not self.fs > 0:
            raise ValueError("fs must be positive")
        idx = [i for i, _ in ann]
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("annotation indices must be strictly increasing")
        if idx and (idx[0] < 0 or idx[-1] >= data.shape[1]):
            raise ValueError("annotation indices out of range")

    @property
    def n_channels(self) -> int:
        return self.data.shape[0]

    @property
    def n_samples(self) -> int:
        return self.data.shape[1]

    @property
    def duration(self) -> float:
        return self.n_samples / self.fs

    def with_data(self, data: np.ndarray) -> "Recording":
        """Copy of this recording with the signal matrix replaced."""
        return replace(self, data=data)


@dataclass(frozen=True)
class EpochSet:
    """Labeled fixed-length trials: tensor is trials x channels x samples.

    ``units`` flags whether the tensor still carries the raw scale ("uV" or a
    feature-specific unit) or has been z-scored ("zscore").  The channel
    dimension is whatever feature is loaded (EEG channels, ICA components,
    scout regions, or harmonic coefficients).
    """

    tensor: np.ndarray
    labels: np.ndarray
    fs: float
    window: tuple
    units: str = "uV"

    def __post_init__(self):
        tensor = np.asarray(self.tensor, dtype=np.float64)
        labels = np.asarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "tensor", tensor)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "window", (float(self.window[0]), float(self.window[1])))
        if tensor.ndim != 3:
            raise ValueError(f"tensor must be trials x channels x samples, got {tensor.shape}")
        if tensor.shape[0] < 1:
            raise ValueError("need at least one trial")
        if labels.shape != (tensor.shape[0],):
            raise ValueError("labels must have one entry per trial")
        if labels.min() < 0 or labels.max() >= N_CLASSES:
            raise ValueError("labels must be in 0..25")
        if not self.fs > 0:
            raise ValueError("fs must be positive")
        start, end = self.window
        expected = int(round((end - start) * self.fs))
        if tensor.shape[2] != expected:
            raise ValueError(
                f"window {self.window} at fs={self.fs} implies {expected} samples, "
                f"tensor has {tensor.shape[2]}"
            )

    @property
    def n_trials(self) -> int:
        return self.tensor.shape[0]

    @property
    def n_channels(self) -> int:
        return self.tensor.shape[1]

    @property
    def n_samples(self) -> int:
        return self.tensor.shape[2]

    def with_tensor(self, tensor: np.ndarray, units: str | None = None) -> "EpochSet":
        return replace(self, tensor=tensor, units=self.units if units is None else units)

    def subset(self, trial_indices: Sequence[int]) -> "EpochSet":
        idx = np.asarray(trial_indices, dtype=np.intp)
        return replace(self, tensor=self.tensor[idx], labels=self.labels[idx])
