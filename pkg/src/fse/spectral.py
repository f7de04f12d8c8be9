"""2D DFT engine used by the extrapolation loops and the evaluation harness.

Convention: the forward transform projects onto conjugate basis functions
(negative-exponent kernel) with no scale factor, so the DC coefficient of an
all-ones grid is M*N. The inverse uses the positive-exponent kernel and
carries the 1/(M*N) normalization. This matches numpy's default convention,
which the wrappers below expose behind dimension and finiteness checks.

All arithmetic is double precision. Both functions are pure and safe to call
concurrently on distinct data.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .errors import ConfigError


def _check_2d_finite(a: np.ndarray, what: str) -> np.ndarray:
    if a.ndim != 2:
        raise ConfigError(f"{what} must be 2-dimensional, got shape {a.shape}")
    if a.shape[0] < 1 or a.shape[1] < 1:
        raise ConfigError(f"{what} must be non-empty, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains non-finite values")
    return a


def dft2(grid: np.ndarray, expected_dims: Optional[tuple[int, int]] = None) -> np.ndarray:
    """Unnormalized forward 2D DFT of a spatial grid.

    X[k, l] = sum_{m,n} x[m, n] * exp(-2j*pi*(k*m/M + l*n/N))

    `expected_dims`, when given, asserts the grid matches the configured
    transform window (dimension mismatch raises ConfigError).
    """
    g = np.asarray(grid)
    _check_2d_finite(g, "grid")
    if expected_dims is not None and g.shape != tuple(expected_dims):
        raise ConfigError(
            f"grid shape {g.shape} does not match configured FFT dims {tuple(expected_dims)}"
        )
    return np.fft.fft2(g)


def idft2(spectrum: np.ndarray) -> np.ndarray:
    """Inverse 2D DFT (positive-exponent kernel, 1/(M*N) scaling).

    Round-trips dft2 to within 1e-10 relative in max norm.
    """
    s = np.asarray(spectrum)
    _check_2d_finite(s, "spectrum")
    return np.fft.ifft2(s)


def basis_function(dims: tuple[int, int], k: int, l: int) -> np.ndarray:
    """Complex exponential atom of the DFT dictionary at frequency (k, l).

    phi[m, n] = exp(2j*pi*k*m/M) * exp(2j*pi*l*n/N). Its forward transform
    is M*N at bin (k, l) and zero elsewhere.
    """
    M, N = dims
    m = np.arange(M).reshape(-1, 1)
    n = np.arange(N).reshape(1, -1)
    return np.exp(2j * np.pi * k * m / M) * np.exp(2j * np.pi * l * n / N)
