"""Monte Carlo harness: pairing, determinism, failure accounting, and CSV output."""

import dataclasses

import numpy as np
import pytest

from robustcs import (
    ExperimentConfig,
    NoiseSpec,
    SpectralComponent,
    ThresholdStrategy,
    compare_thresholds,
    run_campaign,
    run_single_trial,
    run_trial_artifacts,
    write_summary_csv,
    write_trials_csv,
)

CAUCHY = NoiseSpec("cauchy", sigma1=1.0, sigma2=1.0)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(m=200)
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(norms=())
    with pytest.raises(ValueError):
        ExperimentConfig(components=())
    with pytest.raises(ValueError):
        ExperimentConfig(master_seed=-1)
    assert ExperimentConfig().true_support == (16, 32, 64)


def test_trial_is_deterministic_in_seed_and_index():
    config = ExperimentConfig(noise=CAUCHY, trials=5, master_seed=3)
    assert run_single_trial(config, 2) == run_single_trial(config, 2)
    assert run_single_trial(config, 2) != run_single_trial(config, 3)


def test_trial_index_validation():
    with pytest.raises(ValueError):
        run_single_trial(ExperimentConfig(trials=1), -1)


def test_norm_subset_sees_identical_measurement():
    # the subset and noise are drawn before the norm loop, so dropping norms
    # from the config must not change the remaining norms' outcomes
    full = ExperimentConfig(noise=CAUCHY, norms=(1.0, 2.0, 3.0), trials=1, master_seed=11)
    only = dataclasses.replace(full, norms=(1.0,))
    assert run_single_trial(full, 0).outcomes[0] == run_single_trial(only, 0).outcomes[0]


def test_artifacts_share_one_measurement_across_norms():
    config = ExperimentConfig(noise=CAUCHY, trials=1, master_seed=0)
    artifacts = run_trial_artifacts(config, 0)
    assert len(artifacts.profiles) == 3
    assert len(artifacts.spectra) == 3
    assert artifacts.measurement.m == 64
    assert artifacts.result().outcomes == artifacts.outcomes


def test_noiseless_trial_recovers_exactly():
    config = ExperimentConfig(noise=None, norms=(2.0, 3.0), trials=1, master_seed=0)
    result = run_single_trial(config, 0)
    for outcome in result.outcomes:
        assert outcome.support == (16, 32, 64)
        assert outcome.exact
        assert outcome.failure is None
        assert outcome.mse_time < 1e-12
        assert outcome.mse_freq < 1e-12


def test_exact_support_implies_tiny_error_when_noiseless():
    config = ExperimentConfig(noise=None, norms=(2.0,), trials=50, master_seed=5)
    summary = run_campaign(config)
    checked = 0
    for result in summary.results:
        outcome = result.outcomes[0]
        if outcome.exact:
            assert outcome.mse_time < 1e-6
            assert outcome.mse_freq < 1e-6
            checked += 1
    assert checked > 0


def test_empty_support_counts_as_zero_reconstruction():
    config = ExperimentConfig(
        noise=None,
        norms=(2.0,),
        strategy=ThresholdStrategy("max", 0.01),
        trials=10,
        master_seed=0,
    )
    summary = run_campaign(config)
    stats = summary.per_norm[0]
    assert stats.failures_empty == 10
    assert stats.success_rate == 0.0
    # zero reconstruction against the clean signal: mean power 29, spread over 128 bins
    assert stats.median_mse_time == pytest.approx(29.0)
    assert stats.median_mse_freq == pytest.approx(29.0 / 128.0)
    outcome = summary.results[0].outcomes[0]
    assert outcome.support == ()
    assert outcome.failure == "empty"


def test_oversized_support_counts_as_zero_reconstruction():
    config = ExperimentConfig(
        m=4,
        noise=CAUCHY,
        norms=(2.0,),
        strategy=ThresholdStrategy("mean", 1.0),
        trials=10,
        master_seed=0,
    )
    summary = run_campaign(config)
    stats = summary.per_norm[0]
    assert stats.failures_oversized == 10
    outcome = summary.results[0].outcomes[0]
    assert outcome.failure == "oversized"
    assert len(outcome.support) > 4
    assert outcome.mse_time == pytest.approx(29.0)


def test_degenerate_single_trial_summary():
    config = ExperimentConfig(noise=CAUCHY, trials=1, master_seed=9)
    summary = run_campaign(config)
    result = run_single_trial(config, 0)
    for stats, outcome in zip(summary.per_norm, result.outcomes):
        assert stats.trials == 1
        assert stats.success_rate == float(outcome.exact)
        assert stats.median_mse_time == pytest.approx(outcome.mse_time)
        assert stats.median_mse_freq == pytest.approx(outcome.mse_freq)


def test_campaign_is_pure_function_of_config():
    config = ExperimentConfig(noise=CAUCHY, trials=8, master_seed=21)
    assert run_campaign(config) == run_campaign(config)


def test_heavy_tail_ranking_small_campaign():
    config = ExperimentConfig(noise=CAUCHY, trials=10, master_seed=7)
    summary = run_campaign(config)
    assert summary.ranking == (3.0, 2.0, 1.0)
    medians = {s.norm_exponent: s.median_mse_time for s in summary.per_norm}
    assert medians[3.0] < medians[2.0] < medians[1.0]
    assert all(np.isfinite(s.median_mse_time) for s in summary.per_norm)


def test_compare_thresholds_single_equals_campaign():
    config = ExperimentConfig(noise=CAUCHY, trials=5, master_seed=2)
    (paired,) = compare_thresholds(config, [config.strategy])
    assert paired == run_campaign(config)
    with pytest.raises(ValueError):
        compare_thresholds(config, [])


def test_compare_thresholds_pairs_trial_streams():
    config = ExperimentConfig(noise=CAUCHY, norms=(3.0,), trials=4, master_seed=6)
    strategies = [ThresholdStrategy("max", 0.89), ThresholdStrategy("median", 0.89)]
    summaries = compare_thresholds(config, strategies)
    assert [s.config.strategy.kind for s in summaries] == ["max", "median"]
    for strategy, summary in zip(strategies, summaries):
        replaced = dataclasses.replace(config, strategy=strategy)
        assert summary == run_campaign(replaced)


def test_tiny_alpha_degrades_detection():
    config = ExperimentConfig(
        noise=None, strategy=ThresholdStrategy("max", 0.01), trials=20, master_seed=0
    )
    summary = run_campaign(config)
    assert all(s.success_rate < 0.05 for s in summary.per_norm)


def test_trials_csv_round_trip_and_determinism(tmp_path):
    import csv

    config = ExperimentConfig(noise=CAUCHY, trials=6, master_seed=13)
    summary = run_campaign(config)
    path_a = tmp_path / "a.csv"
    path_b = tmp_path / "b.csv"
    write_trials_csv(path_a, summary)
    write_trials_csv(path_b, run_campaign(config))
    assert path_a.read_bytes() == path_b.read_bytes()

    with open(path_a, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6 * 3
    for row, (result, outcome) in zip(
        rows, ((r, o) for r in summary.results for o in r.outcomes)
    ):
        assert int(row["trial"]) == result.trial_index
        assert float(row["L"]) == outcome.norm_exponent
        assert row["strategy"] == "max"
        # repr round-trips the float exactly
        assert float(row["mse_time"]) == outcome.mse_time
        assert float(row["mse_freq"]) == outcome.mse_freq
        assert row["exact"] == str(int(outcome.exact))
        parsed = tuple(int(k) for k in row["support"].split(";")) if row["support"] else ()
        assert parsed == outcome.support


def test_summary_csv_layout(tmp_path):
    import csv

    config = ExperimentConfig(noise=CAUCHY, norms=(1.0, 3.0), trials=5, master_seed=4)
    summaries = compare_thresholds(
        config, [ThresholdStrategy("max", 0.89), ThresholdStrategy("mean", 0.89)]
    )
    path = tmp_path / "summary.csv"
    write_summary_csv(path, summaries)
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2 * 2
    assert [row["strategy"] for row in rows] == ["max", "max", "mean", "mean"]
    for row in rows:
        assert row["alpha"] == "0.89"
        assert int(row["trials"]) == 5
        assert 0.0 <= float(row["success_rate"]) <= 1.0
        assert int(row["rank"]) in (1, 2)


def test_custom_component_sets_are_supported():
    components = (SpectralComponent(2, 1.0), SpectralComponent(5, 0.5, 0.7))
    config = ExperimentConfig(
        n_len=16, m=8, components=components, noise=None, norms=(2.0,),
        trials=3, master_seed=1,
    )
    summary = run_campaign(config)
    assert config.true_support == (2, 5)
    assert summary.per_norm[0].trials == 3
