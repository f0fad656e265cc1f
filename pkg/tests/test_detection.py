"""Threshold computation and support selection from a deviation profile."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from robustcs import GDProfile, ThresholdStrategy, compute_threshold, detect_support


def profile_of(values, norm=2.0, m_used=4):
    return GDProfile(np.asarray(values, dtype=float), norm, m_used)


def test_strategy_validation():
    with pytest.raises(ValueError):
        ThresholdStrategy(kind="minimum")
    with pytest.raises(ValueError):
        ThresholdStrategy(alpha=0.0)
    with pytest.raises(ValueError):
        ThresholdStrategy(alpha=1.2)
    default = ThresholdStrategy()
    assert (default.kind, default.alpha) == ("max", 0.89)


def test_threshold_hand_values():
    profile = profile_of([1.0, 2.0, 3.0, 4.0])
    assert compute_threshold(profile, ThresholdStrategy("max", 0.5)) == pytest.approx(2.0)
    assert compute_threshold(profile, ThresholdStrategy("mean", 0.5)) == pytest.approx(1.25)
    assert compute_threshold(profile, ThresholdStrategy("median", 0.5)) == pytest.approx(1.25)
    assert compute_threshold(profile, ThresholdStrategy("max", 1.0)) == pytest.approx(4.0)


def test_empty_profile_rejected():
    with pytest.raises(ValueError):
        compute_threshold(profile_of([]), ThresholdStrategy())


def test_detect_support_strict_inequality():
    profile = profile_of([2.0, 1.0, 2.0, 2.0])
    # threshold is exactly 1.0: the bin sitting at the threshold is excluded
    support = detect_support(profile, ThresholdStrategy("max", 0.5))
    np.testing.assert_array_equal(support, [])
    support = detect_support(profile, ThresholdStrategy("max", 0.75))
    np.testing.assert_array_equal(support, [1])


def test_detect_support_known_dips():
    values = np.full(16, 10.0)
    values[[3, 7]] = 1.0
    support = detect_support(profile_of(values), ThresholdStrategy("max", 0.89))
    np.testing.assert_array_equal(support, [3, 7])


def test_max_strategy_never_selects_the_argmax():
    rng = np.random.default_rng(2)
    for _ in range(25):
        profile = profile_of(rng.uniform(0.1, 5.0, size=32))
        support = detect_support(profile, ThresholdStrategy("max", 1.0))
        assert int(np.argmax(profile.values)) not in support


@settings(max_examples=60, deadline=None)
@given(
    st.integers(0, 2**32 - 1),
    st.sampled_from(["max", "mean", "median"]),
    st.integers(1, 99),
    st.integers(1, 99),
)
def test_threshold_monotone_and_support_nested_in_alpha(seed, kind, a1, a2):
    lo, hi = sorted((a1 / 100.0, a2 / 100.0))
    profile = profile_of(np.random.default_rng(seed).uniform(0.0, 9.0, size=24))
    t_lo = compute_threshold(profile, ThresholdStrategy(kind, lo))
    t_hi = compute_threshold(profile, ThresholdStrategy(kind, hi))
    assert t_lo <= t_hi
    s_lo = detect_support(profile, ThresholdStrategy(kind, lo))
    s_hi = detect_support(profile, ThresholdStrategy(kind, hi))
    assert set(s_lo) <= set(s_hi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["max", "mean", "median"]))
def test_support_sorted_unique_in_range(seed, kind):
    profile = profile_of(np.random.default_rng(seed).uniform(0.0, 9.0, size=24))
    support = detect_support(profile, ThresholdStrategy(kind, 0.89))
    assert np.all(np.diff(support) > 0)
    assert support.size == 0 or (support[0] >= 0 and support[-1] < 24)
