"""Non-iterative compressive sensing reconstruction with selectable minimization norms."""

from .signals import (
    MeasurementSet,
    SpectralComponent,
    dft,
    idft,
    sample_measurements,
    synthesize_sparse_signal,
)
from .noise import NoiseSpec, NormRecommendation, add_noise, generate_noise, ml_norm_for
from .deviation import (
    GDProfile,
    analytic_gd_ratio,
    generalized_deviation,
    robust_transform_estimate,
    rotated_samples,
)
from .detection import ThresholdStrategy, compute_threshold, detect_support
from .reconstruction import (
    PartialDftSystem,
    build_cs_system,
    least_squares_solve,
    spectrum_from_coefficients,
)
from .experiments import (
    CampaignSummary,
    ExperimentConfig,
    NormOutcome,
    NormStats,
    TrialArtifacts,
    TrialResult,
    compare_thresholds,
    run_campaign,
    run_single_trial,
    run_trial_artifacts,
    write_gd_profile_dat,
    write_spectrum_overlay_dat,
    write_summary_csv,
    write_time_overlay_dat,
    write_trials_csv,
)

__version__ = "0.1.0"

__all__ = [
    "CampaignSummary",
    "ExperimentConfig",
    "GDProfile",
    "MeasurementSet",
    "NoiseSpec",
    "NormOutcome",
    "NormRecommendation",
    "NormStats",
    "PartialDftSystem",
    "SpectralComponent",
    "ThresholdStrategy",
    "TrialArtifacts",
    "TrialResult",
    "add_noise",
    "analytic_gd_ratio",
    "build_cs_system",
    "compare_thresholds",
    "compute_threshold",
    "detect_support",
    "dft",
    "generalized_deviation",
    "generate_noise",
    "idft",
    "least_squares_solve",
    "ml_norm_for",
    "robust_transform_estimate",
    "rotated_samples",
    "run_campaign",
    "run_single_trial",
    "run_trial_artifacts",
    "sample_measurements",
    "spectrum_from_coefficients",
    "synthesize_sparse_signal",
    "write_gd_profile_dat",
    "write_spectrum_overlay_dat",
    "write_summary_csv",
    "write_time_overlay_dat",
    "write_trials_csv",
]
