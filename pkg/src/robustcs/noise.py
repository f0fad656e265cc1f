"""Complex-valued noise families and their matching minimization norms.

All generators draw from an explicitly passed ``numpy.random.Generator`` and
are bitwise-reproducible for a fixed seed.  Draw order is fixed: real-part
vectors precede imaginary-part vectors, and the Cauchy family draws its
numerator before its denominator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import MeasurementSet

GAUSSIAN = "gaussian"
LAPLACE = "laplace"
CAUCHY = "cauchy"
CUBIC = "cubic"

NOISE_VARIANTS = (GAUSSIAN, LAPLACE, CAUCHY, CUBIC)


@dataclass(frozen=True)
class NoiseSpec:
    """Noise family with per-part scales sigma1 (real) and sigma2 (imaginary)."""

    variant: str
    sigma1: float = 1.0
    sigma2: float = 1.0

    def __post_init__(self):
        if self.variant not in NOISE_VARIANTS:
            raise ValueError(
                f"unknown noise variant {self.variant!r}, expected one of {NOISE_VARIANTS}"
            )
        if self.sigma1 <= 0 or self.sigma2 <= 0:
            raise ValueError("sigma1 and sigma2 must be positive")


@dataclass(frozen=True)
class NormRecommendation:
    """Norm exponent suited to a noise family.

    ``exact`` is True when the exponent is the maximum-likelihood match for
    the family's density, False when it is an empirical recommendation.
    """

    exponent: float
    exact: bool
    note: str


def _standard_laplace(rng: np.random.Generator, size: int) -> np.ndarray:
    # Inverse CDF on uniform draws.  The clip guards against u == 0, which
    # would map to -inf.
    u = np.clip(rng.random(size), 1e-300, None)
    return np.where(u < 0.5, np.log(2.0 * u), -np.log(2.0 * (1.0 - u)))


def generate_noise(
    spec: NoiseSpec, n_len: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw n_len complex noise values from the given family.

    Gaussian and Laplace scale independent standard draws per part.  Cauchy is
    the elementwise quotient of two independent complex Gaussians built from
    four independent standard-normal vectors.  Cubic applies an elementwise
    cube to scaled Gaussian draws per part.
    """
    if n_len < 1:
        raise ValueError(f"n_len must be positive, got {n_len}")
    s1, s2 = spec.sigma1, spec.sigma2
    if spec.variant == GAUSSIAN:
        return s1 * rng.standard_normal(n_len) + 1j * s2 * rng.standard_normal(n_len)
    if spec.variant == LAPLACE:
        re = _standard_laplace(rng, n_len)
        im = _standard_laplace(rng, n_len)
        return s1 * re + 1j * s2 * im
    if spec.variant == CAUCHY:
        g1 = rng.standard_normal(n_len)
        g2 = rng.standard_normal(n_len)
        g3 = rng.standard_normal(n_len)
        g4 = rng.standard_normal(n_len)
        return (s1 * g1 + 1j * s2 * g2) / (s1 * g3 + 1j * s2 * g4)
    if spec.variant == CUBIC:
        re = (s1 * rng.standard_normal(n_len)) ** 3
        im = (s2 * rng.standard_normal(n_len)) ** 3
        return re + 1j * im
    raise ValueError(f"unknown noise variant {spec.variant!r}")


def add_noise(
    ms: MeasurementSet, spec: NoiseSpec, rng: np.random.Generator
) -> MeasurementSet:
    """New measurement set with corrupted values; indices and length unchanged."""
    noisy = ms.values + generate_noise(spec, ms.m, rng)
    return MeasurementSet(indices=ms.indices, values=noisy, n_len=ms.n_len)


def ml_norm_for(variant: str) -> NormRecommendation:
    """Map a noise family to the minimization-norm exponent suited to it."""
    if variant == GAUSSIAN:
        return NormRecommendation(2.0, True, "squared error is the ML estimator for Gaussian noise")
    if variant == LAPLACE:
        return NormRecommendation(1.0, True, "absolute error is the ML estimator for Laplace noise")
    if variant in (CAUCHY, CUBIC):
        return NormRecommendation(
            3.0, False, "no finite-exponent ML match for this family; empirical recommendation"
        )
    raise ValueError(f"unknown noise variant {variant!r}")
