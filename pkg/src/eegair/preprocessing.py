"""Referencing, epoching, and per-trial normalization.

Functional forms do the work; thin sklearn-style transformers wrap them so
the steps compose with pipelines and grid tooling.
"""

from __future__ import annotations

import warnings

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .containers import EpochSet, Recording


def common_average_reference(rec: Recording) -> Recording:
    """Subtract the instantaneous mean across channels from every channel.

    Requires at least two channels; with one channel the reference would
    annihilate the signal.
    """
    if rec.n_channels < 2:
        raise ValueError("CAR undefined for single-channel recordings")
    data = rec.data - rec.data.mean(axis=0, keepdims=True)
    return rec.with_data(data)


def epoch(rec: Recording, window: tuple, pad_mode: str = "zero") -> EpochSet:
    """Cut one fixed-length trial per annotation.

    ``window`` is (start_s, end_s) relative to the annotation sample.  Trials
    that run past the end of the recording are zero-padded at the tail; the
    pre-event context must be fully available, otherwise the trial is skipped
    with a warning.  Use :class:`Epocher` to also retrieve the skip count.
    """
    if pad_mode != "zero":
        raise ValueError(f"unsupported pad_mode {pad_mode!r}")
    start_s, end_s = float(window[0]), float(window[1])
    if end_s <= start_s:
        raise ValueError("window end must be after window start")
    n_out = int(round((end_s - start_s) * rec.fs))
    n_history = int(round(-start_s * rec.fs)) if start_s < 0 else 0

    trials, labels, skipped = [], [], 0
    for onset, label in rec.annotations:
        first = onset + int(round(start_s * rec.fs))
        if first < 0:
            skipped += 1
            continue
        last = first + n_out
        chunk = rec.data[:, first:min(last, rec.n_samples)]
        if chunk.shape[1] < n_out:
            pad = np.zeros((rec.n_channels, n_out - chunk.shape[1]))
            chunk = np.concatenate([chunk, pad], axis=1)
        trials.append(chunk)
        labels.append(label)
    if skipped:
        warnings.warn(
            f"skipped {skipped} annotation(s) with fewer than {n_history} history samples",
            stacklevel=2,
        )
    if not trials:
        raise ValueError("no trial had enough history; nothing to epoch")
    tensor = np.stack(trials)
    return EpochSet(tensor=tensor, labels=np.asarray(labels), fs=rec.fs, window=(start_s, end_s))


def znormalize(epochs: EpochSet) -> EpochSet:
    """Per-trial, per-channel z-scoring.

    Rows with zero variance (all-zero padding, constant channels) come out as
    zeros instead of NaN.
    """
    mean = epochs.tensor.mean(axis=2, keepdims=True)
    sd = epochs.tensor.std(axis=2, keepdims=True)
    safe = np.where(sd > 0, sd, 1.0)
    out = np.where(sd > 0, (epochs.tensor - mean) / safe, 0.0)
    return epochs.with_tensor(out, units="zscore")


class CommonAverageReference(BaseEstimator, TransformerMixin):
    """Stateless transformer form of :func:`common_average_reference`."""

    def fit(self, rec: Recording, y=None):
        return self

    def transform(self, rec: Recording) -> Recording:
        return common_average_reference(rec)


class Epocher(BaseEstimator, TransformerMixin):
    """Cut annotated recordings into fixed-length labeled trials.

    After ``transform``, ``n_skipped_`` holds the number of annotations
    dropped for insufficient history.
    """

    def __init__(self, start_s=-1.0, end_s=2.0):
        self.start_s = start_s
        self.end_s = end_s

    def fit(self, rec: Recording, y=None):
        return self

    def transform(self, rec: Recording) -> EpochSet:
        out = epoch(rec, (self.start_s, self.end_s))
        self.n_skipped_ = len(rec.annotations) - out.n_trials
        return out


class TrialZScorer(BaseEstimator, TransformerMixin):
    """Stateless transformer form of :func:`znormalize`."""

    def fit(self, epochs: EpochSet, y=None):
        return self

    def transform(self, epochs: EpochSet) -> EpochSet:
        return znormalize(epochs)
