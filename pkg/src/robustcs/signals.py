"""Sparse complex-exponential signals, DFT conventions, and random subsampling.

The forward transform carries a 1/N factor so that a unit-amplitude complex
exponential at bin k produces a spectrum with X(k) = 1.  Frequency bins run
over k = 0 .. N-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class SpectralComponent:
    """One complex exponential: frequency bin, nonnegative amplitude, phase in radians."""

    bin_index: int
    amplitude: float
    phase: float = 0.0

    def __post_init__(self):
        if self.bin_index < 0:
            raise ValueError(f"bin_index must be nonnegative, got {self.bin_index}")
        if self.amplitude < 0:
            raise ValueError(f"amplitude must be nonnegative, got {self.amplitude}")


@dataclass(frozen=True)
class MeasurementSet:
    """M available samples of a length-N signal.

    Attributes
    ----------
    indices : np.ndarray
        Strictly increasing sample indices, all in [0, n_len).
    values : np.ndarray
        Complex sample values at those indices (possibly noisy).
    n_len : int
        Ambient signal length N.
    """

    indices: np.ndarray
    values: np.ndarray
    n_len: int

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.intp)
        values = np.asarray(self.values, dtype=np.complex128)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "values", values)
        if self.n_len < 1:
            raise ValueError(f"n_len must be positive, got {self.n_len}")
        if indices.ndim != 1 or values.ndim != 1 or indices.size != values.size:
            raise ValueError("indices and values must be 1-d arrays of equal length")
        if indices.size > self.n_len:
            raise ValueError(
                f"cannot hold {indices.size} measurements of a length-{self.n_len} signal"
            )
        if indices.size and (indices[0] < 0 or indices[-1] >= self.n_len):
            raise ValueError(f"indices must lie in [0, {self.n_len})")
        if indices.size > 1 and np.any(np.diff(indices) <= 0):
            raise ValueError("indices must be strictly increasing")

    @property
    def m(self) -> int:
        """Number of available measurements."""
        return self.indices.size


def synthesize_sparse_signal(
    components: Iterable[SpectralComponent], n_len: int
) -> np.ndarray:
    """Sum of complex exponentials A_i * exp(j(2 pi k_i n / N + phi_i)).

    Parameters
    ----------
    components : iterable of SpectralComponent
        Components with distinct bins, all below n_len.
    n_len : int
        Signal length N.

    Returns
    -------
    np.ndarray
        Complex time-domain samples for n = 0 .. n_len - 1.
    """
    if n_len < 1:
        raise ValueError(f"n_len must be positive, got {n_len}")
    comps = list(components)
    if not comps:
        raise ValueError("at least one component is required")
    bins = [c.bin_index for c in comps]
    if len(set(bins)) != len(bins):
        raise ValueError(f"duplicate frequency bins in {sorted(bins)}")
    out_of_range = [b for b in bins if b >= n_len]
    if out_of_range:
        raise ValueError(f"bins {out_of_range} out of range for n_len={n_len}")
    n = np.arange(n_len)
    x = np.zeros(n_len, dtype=np.complex128)
    for c in comps:
        x += c.amplitude * np.exp(1j * (2.0 * np.pi * c.bin_index * n / n_len + c.phase))
    return x


def dft(signal: np.ndarray) -> np.ndarray:
    """Forward DFT, X(k) = (1/N) sum_n x(n) exp(-j 2 pi k n / N)."""
    x = np.asarray(signal, dtype=np.complex128)
    return np.fft.fft(x) / x.size


def idft(spectrum: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dft`, x(n) = sum_k X(k) exp(j 2 pi k n / N)."""
    x = np.asarray(spectrum, dtype=np.complex128)
    return np.fft.ifft(x) * x.size


def sample_measurements(
    signal: np.ndarray, m: int, rng: np.random.Generator
) -> MeasurementSet:
    """Draw m distinct sample indices uniformly without replacement.

    Deterministic for a fixed generator state; indices are returned sorted.
    """
    x = np.asarray(signal, dtype=np.complex128)
    n_len = x.size
    if not 1 <= m <= n_len:
        raise ValueError(f"m must be in [1, {n_len}], got {m}")
    indices = np.sort(rng.choice(n_len, size=m, replace=False))
    return MeasurementSet(indices=indices, values=x[indices], n_len=n_len)
