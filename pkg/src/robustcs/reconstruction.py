"""Partial DFT system assembly and least-squares recovery of sparse coefficients.

Rows of the system matrix correspond to available measurements, columns to
detected support bins.  The kernels carry no 1/N factor, so the solved
coefficients equal the complex amplitudes A_i * exp(j phi_i) directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import MeasurementSet

MAX_CONDITION = 1e12


@dataclass(frozen=True)
class PartialDftSystem:
    """Measurement-by-support matrix of unit-modulus DFT kernels with its right-hand side."""

    matrix: np.ndarray
    rhs: np.ndarray
    support: np.ndarray
    n_len: int


def build_cs_system(ms: MeasurementSet, support: np.ndarray) -> PartialDftSystem:
    """Restrict the inverse DFT map to the support bins at the measured indices.

    Entry (m, i) is exp(j 2 pi k_i n_m / N), so matrix @ coeffs reproduces the
    sparse synthesis at the measured indices when coeffs holds the complex
    amplitudes.
    """
    support = np.atleast_1d(np.asarray(support, dtype=np.intp))
    if support.size == 0:
        raise ValueError("empty support")
    if support.size > ms.m:
        raise ValueError(
            f"support size {support.size} exceeds measurement count {ms.m}: "
            "system is underdetermined"
        )
    if np.unique(support).size != support.size:
        raise ValueError(f"duplicate support bins in {support.tolist()}")
    if np.any(support < 0) or np.any(support >= ms.n_len):
        raise ValueError(f"support bins must lie in [0, {ms.n_len})")
    matrix = np.exp(2j * np.pi * np.outer(ms.indices, support) / ms.n_len)
    return PartialDftSystem(
        matrix=matrix, rhs=ms.values.copy(), support=support, n_len=ms.n_len
    )


def least_squares_solve(system: PartialDftSystem) -> np.ndarray:
    """Unique least-squares coefficients for the partial DFT system.

    Solved through an orthogonal factorization rather than explicit normal
    equations; the minimizer is identical.  A system whose condition estimate
    exceeds 1e12 is rejected, naming the support bins that the sampled
    indices cannot distinguish.
    """
    _, singular, vh = np.linalg.svd(system.matrix, full_matrices=False)
    if singular[-1] == 0.0 or singular[0] / singular[-1] > MAX_CONDITION:
        null_direction = np.abs(vh[-1])
        involved = system.support[null_direction > 0.1 * null_direction.max()]
        raise np.linalg.LinAlgError(
            f"rank-deficient partial DFT system: collinear support bins "
            f"{involved.tolist()} cannot be separated by the sampled indices"
        )
    coeffs, *_ = np.linalg.lstsq(system.matrix, system.rhs, rcond=None)
    return coeffs


def spectrum_from_coefficients(
    coeffs: np.ndarray, support: np.ndarray, n_len: int
) -> np.ndarray:
    """Embed sparse coefficients into a full length-N spectrum, zero elsewhere."""
    coeffs = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
    support = np.atleast_1d(np.asarray(support, dtype=np.intp))
    if coeffs.size != support.size:
        raise ValueError(
            f"coefficient count {coeffs.size} does not match support size {support.size}"
        )
    if support.size and (np.any(support < 0) or np.any(support >= n_len)):
        raise ValueError(f"support bins must lie in [0, {n_len})")
    spectrum = np.zeros(n_len, dtype=np.complex128)
    spectrum[support] = coeffs
    return spectrum
