"""Gaussian window construction and valid-mode separable filtering.

Shared by the hue-gradient weighting stage and by SSIM's local statistics.
"""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def gaussian_kernel_1d(window: int, sigma: float) -> np.ndarray:
    """Normalized 1D Gaussian taps of odd length `window`."""
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be a positive odd integer, got {window}")
    if sigma <= 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = np.arange(window, dtype=np.float64) - (window - 1) / 2
    k = np.exp(-(x**2) / (2.0 * sigma**2))
    return k / k.sum()


def gaussian_kernel_2d(window: int, sigma: float) -> np.ndarray:
    """Normalized 2D Gaussian (outer product of the 1D taps)."""
    k = gaussian_kernel_1d(window, sigma)
    return np.outer(k, k)


def filter_valid(plane: np.ndarray, window: int, sigma: float) -> np.ndarray:
    """Weighted local mean of `plane` over every full window position.

    Output is ``(H - window + 1, W - window + 1)``: no padding is applied, so a
    value is only produced where the whole window lies inside the plane.
    """
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError(f"expected a 2D plane, got shape {plane.shape}")
    h, w = plane.shape
    if h < window or w < window:
        raise ValueError(f"plane {h}x{w} is smaller than the {window}x{window} window")
    k = gaussian_kernel_1d(window, sigma)
    rows = sliding_window_view(plane, window, axis=0) @ k
    return sliding_window_view(rows, window, axis=1) @ k
