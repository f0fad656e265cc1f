"""Threshold strategies that turn a deviation profile into a detected support set."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .deviation import GDProfile

MAX = "max"
MEAN = "mean"
MEDIAN = "median"

STRATEGY_KINDS = (MAX, MEAN, MEDIAN)


@dataclass(frozen=True)
class ThresholdStrategy:
    """Threshold alpha * {max | mean | median} of the deviation profile."""

    kind: str = MAX
    alpha: float = 0.89

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(
                f"unknown strategy kind {self.kind!r}, expected one of {STRATEGY_KINDS}"
            )
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")


def compute_threshold(profile: GDProfile, strategy: ThresholdStrategy) -> float:
    """Scalar detection threshold for the given profile and strategy."""
    v = profile.values
    if v.size == 0:
        raise ValueError("empty profile")
    if strategy.kind == MAX:
        ref = float(np.max(v))
    elif strategy.kind == MEAN:
        ref = float(np.mean(v))
    else:
        ref = float(np.median(v))
    return strategy.alpha * ref


def detect_support(profile: GDProfile, strategy: ThresholdStrategy) -> np.ndarray:
    """Bins whose deviation falls strictly below the threshold.

    Low deviation marks signal positions.  The result is sorted, duplicate
    free, and may be empty; the caller decides how to treat an empty set.
    """
    threshold = compute_threshold(profile, strategy)
    return np.flatnonzero(profile.values < threshold)
