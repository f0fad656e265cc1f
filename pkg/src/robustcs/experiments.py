"""Seeded Monte Carlo harness comparing minimization norms and threshold strategies.

Each trial draws one measurement subset and one noise realization that every
compared norm sees unchanged, so per-trial differences are attributable to the
norm alone.  Campaign aggregation ranks norms by median time-domain error
against the clean signal; medians keep the ranking stable under heavy-tailed
noise where per-trial errors have no useful mean.
"""

from __future__ import annotations

import csv
import dataclasses
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .detection import ThresholdStrategy, compute_threshold, detect_support
from .deviation import GDProfile, generalized_deviation
from .noise import NoiseSpec, add_noise
from .reconstruction import build_cs_system, least_squares_solve, spectrum_from_coefficients
from .signals import (
    MeasurementSet,
    SpectralComponent,
    dft,
    idft,
    sample_measurements,
    synthesize_sparse_signal,
)

FAILURE_EMPTY = "empty"
FAILURE_OVERSIZED = "oversized"
FAILURE_RANK_DEFICIENT = "rank-deficient"

FAILURE_REASONS = (FAILURE_EMPTY, FAILURE_OVERSIZED, FAILURE_RANK_DEFICIENT)

DEFAULT_COMPONENTS = (
    SpectralComponent(bin_index=16, amplitude=4.0),
    SpectralComponent(bin_index=32, amplitude=3.0),
    SpectralComponent(bin_index=64, amplitude=2.0),
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one Monte Carlo campaign.

    A campaign is a pure function of this config: the per-trial random
    stream is derived from (master_seed, trial_index), so results are
    reproducible and earlier trials do not reshuffle when the trial count
    changes.
    """

    n_len: int = 128
    m: int = 64
    components: tuple[SpectralComponent, ...] = DEFAULT_COMPONENTS
    noise: NoiseSpec | None = None
    norms: tuple[float, ...] = (1.0, 2.0, 3.0)
    strategy: ThresholdStrategy = ThresholdStrategy()
    trials: int = 200
    master_seed: int = 0

    def __post_init__(self):
        if self.n_len < 1:
            raise ValueError(f"n_len must be positive, got {self.n_len}")
        if not 1 <= self.m <= self.n_len:
            raise ValueError(f"m must lie in [1, {self.n_len}], got {self.m}")
        if len(self.components) == 0:
            raise ValueError("components must be nonempty")
        if len(self.norms) == 0:
            raise ValueError("norms must be nonempty")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        # np.random.default_rng seeds from non-negative entropy words only
        if self.master_seed < 0:
            raise ValueError(f"master_seed must be >= 0, got {self.master_seed}")

    @property
    def true_support(self) -> tuple[int, ...]:
        return tuple(sorted(c.bin_index for c in self.components))


@dataclass(frozen=True)
class NormOutcome:
    """Result of one norm's detection and reconstruction inside a trial."""

    norm_exponent: float
    support: tuple[int, ...]
    exact: bool
    mse_time: float
    mse_freq: float
    failure: str | None = None


@dataclass(frozen=True)
class TrialResult:
    trial_index: int
    outcomes: tuple[NormOutcome, ...]


@dataclass(frozen=True)
class TrialArtifacts:
    """Everything produced inside one trial, kept for figure emission."""

    trial_index: int
    measurement: MeasurementSet
    clean_signal: np.ndarray
    desired_spectrum: np.ndarray
    profiles: tuple[GDProfile, ...]
    thresholds: tuple[float, ...]
    spectra: tuple[np.ndarray, ...]
    outcomes: tuple[NormOutcome, ...]

    def result(self) -> TrialResult:
        return TrialResult(self.trial_index, self.outcomes)


@dataclass(frozen=True)
class NormStats:
    norm_exponent: float
    trials: int
    success_rate: float
    median_mse_time: float
    median_mse_freq: float
    failures_empty: int
    failures_oversized: int
    failures_rank_deficient: int


@dataclass(frozen=True)
class CampaignSummary:
    """Per-norm aggregates plus the norm ranking by median time-domain MSE."""

    config: ExperimentConfig
    per_norm: tuple[NormStats, ...]
    ranking: tuple[float, ...]
    results: tuple[TrialResult, ...]


def run_trial_artifacts(config: ExperimentConfig, trial_index: int) -> TrialArtifacts:
    """One full trial keeping profiles and spectra for figure output.

    The random stream is seeded by (master_seed, trial_index).  The subset
    and the noise realization are drawn once, before the norm loop, so all
    norms score against the identical measurement set.  A norm that yields
    an empty, oversized, or rank-deficient system is recorded as a failure
    and scored as the zero reconstruction, which keeps campaign medians
    well defined.
    """
    if trial_index < 0:
        raise ValueError(f"trial_index must be >= 0, got {trial_index}")
    rng = np.random.default_rng([config.master_seed, trial_index])
    clean = synthesize_sparse_signal(config.components, config.n_len)
    desired = dft(clean)
    ms = sample_measurements(clean, config.m, rng)
    if config.noise is not None:
        ms = add_noise(ms, config.noise, rng)

    true_bins = config.true_support
    profiles = []
    thresholds = []
    spectra = []
    outcomes = []
    for norm in config.norms:
        profile = generalized_deviation(ms, norm)
        threshold = compute_threshold(profile, config.strategy)
        support = detect_support(profile, config.strategy)

        failure = None
        spectrum = np.zeros(config.n_len, dtype=np.complex128)
        if support.size == 0:
            failure = FAILURE_EMPTY
        elif support.size > ms.m:
            failure = FAILURE_OVERSIZED
        else:
            try:
                system = build_cs_system(ms, support)
                coeffs = least_squares_solve(system)
                spectrum = spectrum_from_coefficients(coeffs, support, config.n_len)
            except np.linalg.LinAlgError:
                failure = FAILURE_RANK_DEFICIENT
                spectrum = np.zeros(config.n_len, dtype=np.complex128)

        recon = idft(spectrum)
        mse_time = float(np.mean(np.abs(recon - clean) ** 2))
        mse_freq = float(np.mean(np.abs(spectrum - desired) ** 2))
        exact = tuple(int(k) for k in support) == true_bins

        profiles.append(profile)
        thresholds.append(threshold)
        spectra.append(spectrum)
        outcomes.append(
            NormOutcome(
                norm_exponent=float(norm),
                support=tuple(int(k) for k in support),
                exact=exact,
                mse_time=mse_time,
                mse_freq=mse_freq,
                failure=failure,
            )
        )

    return TrialArtifacts(
        trial_index=trial_index,
        measurement=ms,
        clean_signal=clean,
        desired_spectrum=desired,
        profiles=tuple(profiles),
        thresholds=tuple(thresholds),
        spectra=tuple(spectra),
        outcomes=tuple(outcomes),
    )


def run_single_trial(config: ExperimentConfig, trial_index: int) -> TrialResult:
    """One paired trial scoring every configured norm on a shared measurement."""
    return run_trial_artifacts(config, trial_index).result()


def summarize(config: ExperimentConfig, results: Sequence[TrialResult]) -> CampaignSummary:
    """Aggregate trial results; order-independent given the same result set."""
    ordered = tuple(sorted(results, key=lambda r: r.trial_index))
    per_norm = []
    for i, norm in enumerate(config.norms):
        rows = [r.outcomes[i] for r in ordered]
        mse_time = np.array([o.mse_time for o in rows])
        mse_freq = np.array([o.mse_freq for o in rows])
        per_norm.append(
            NormStats(
                norm_exponent=float(norm),
                trials=len(rows),
                success_rate=float(np.mean([o.exact for o in rows])),
                median_mse_time=float(np.median(mse_time)),
                median_mse_freq=float(np.median(mse_freq)),
                failures_empty=sum(o.failure == FAILURE_EMPTY for o in rows),
                failures_oversized=sum(o.failure == FAILURE_OVERSIZED for o in rows),
                failures_rank_deficient=sum(
                    o.failure == FAILURE_RANK_DEFICIENT for o in rows
                ),
            )
        )
    ranking = tuple(
        s.norm_exponent
        for s in sorted(per_norm, key=lambda s: (s.median_mse_time, s.norm_exponent))
    )
    return CampaignSummary(
        config=config,
        per_norm=tuple(per_norm),
        ranking=ranking,
        results=ordered,
    )


def run_campaign(config: ExperimentConfig) -> CampaignSummary:
    """Run the configured number of paired trials and aggregate them."""
    results = [run_single_trial(config, t) for t in range(config.trials)]
    return summarize(config, results)


def compare_thresholds(
    config: ExperimentConfig, strategies: Sequence[ThresholdStrategy]
) -> tuple[CampaignSummary, ...]:
    """One campaign per strategy over identical trial streams.

    The per-trial subset and noise draws depend only on (master_seed,
    trial_index), so every strategy scores the same measurements and the
    comparison is paired.
    """
    if len(strategies) == 0:
        raise ValueError("strategies must be nonempty")
    return tuple(
        run_campaign(dataclasses.replace(config, strategy=s)) for s in strategies
    )


def write_trials_csv(path, summaries: CampaignSummary | Iterable[CampaignSummary]) -> None:
    """One row per trial per norm; floats at full round-trip precision."""
    if isinstance(summaries, CampaignSummary):
        summaries = [summaries]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["trial", "L", "strategy", "support", "exact", "mse_time", "mse_freq", "failure"]
        )
        for summary in summaries:
            kind = summary.config.strategy.kind
            for result in summary.results:
                for outcome in result.outcomes:
                    writer.writerow(
                        [
                            result.trial_index,
                            repr(outcome.norm_exponent),
                            kind,
                            ";".join(str(k) for k in outcome.support),
                            int(outcome.exact),
                            repr(outcome.mse_time),
                            repr(outcome.mse_freq),
                            outcome.failure or "",
                        ]
                    )


def write_summary_csv(path, summaries: CampaignSummary | Iterable[CampaignSummary]) -> None:
    """One row per norm per campaign with the rank induced by median time MSE."""
    if isinstance(summaries, CampaignSummary):
        summaries = [summaries]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "strategy",
                "alpha",
                "L",
                "trials",
                "success_rate",
                "median_mse_time",
                "median_mse_freq",
                "failures_empty",
                "failures_oversized",
                "failures_rank_deficient",
                "rank",
            ]
        )
        for summary in summaries:
            strategy = summary.config.strategy
            for stats in summary.per_norm:
                writer.writerow(
                    [
                        strategy.kind,
                        repr(strategy.alpha),
                        repr(stats.norm_exponent),
                        stats.trials,
                        repr(stats.success_rate),
                        repr(stats.median_mse_time),
                        repr(stats.median_mse_freq),
                        stats.failures_empty,
                        stats.failures_oversized,
                        stats.failures_rank_deficient,
                        summary.ranking.index(stats.norm_exponent) + 1,
                    ]
                )


def _write_columns(path, header_lines: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    arrays = [np.asarray(c) for c in columns]
    with open(path, "w") as fh:
        for line in header_lines:
            fh.write(f"# {line}\n")
        for row in zip(*arrays):
            fh.write(" ".join(repr(float(v)) for v in row) + "\n")


def write_gd_profile_dat(path, profile: GDProfile, threshold: float, label: str) -> None:
    """Deviation profile with its constant threshold, one (k, GD, T) row per bin."""
    bins = np.arange(profile.n_len, dtype=float)
    tcol = np.full(profile.n_len, threshold)
    _write_columns(path, [label, "columns: k GD(k) T"], [bins, profile.values, tcol])


def write_spectrum_overlay_dat(
    path, desired: np.ndarray, reconstructed: np.ndarray, label: str
) -> None:
    """Desired versus reconstructed spectrum magnitudes, one row per bin."""
    desired = np.asarray(desired)
    reconstructed = np.asarray(reconstructed)
    if desired.shape != reconstructed.shape:
        raise ValueError("desired and reconstructed spectra must have equal length")
    bins = np.arange(desired.size, dtype=float)
    _write_columns(
        path,
        [label, "columns: k |X_desired(k)| |X_reconstructed(k)|"],
        [bins, np.abs(desired), np.abs(reconstructed)],
    )


def write_time_overlay_dat(
    path, desired: np.ndarray, reconstructed: np.ndarray, label: str
) -> None:
    """Real parts of the desired and reconstructed signals, one row per sample."""
    desired = np.asarray(desired)
    reconstructed = np.asarray(reconstructed)
    if desired.shape != reconstructed.shape:
        raise ValueError("desired and reconstructed signals must have equal length")
    n = np.arange(desired.size, dtype=float)
    _write_columns(
        path,
        [label, "columns: n Re_x_desired(n) Re_x_reconstructed(n)"],
        [n, desired.real, reconstructed.real],
    )
