"""SSIM with Gaussian-weighted windows, for linear planes such as chroma."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .color import CHROMA_MAX, LhcImage
from .errors import DimensionMismatchError, ImageTooSmallError
from .filters import filter_valid


@dataclass(frozen=True)
class SsimParams:
    k1: float = 0.01
    k2: float = 0.03
    dynamic_range: float = 1.0
    sigma: float = 1.5
    window: int = 11

    def __post_init__(self):
        if self.k1 <= 0 or self.k2 <= 0:
            raise ValueError("k1 and k2 must be positive")
        if self.dynamic_range <= 0 or self.sigma <= 0:
            raise ValueError("dynamic_range and sigma must be positive")
        if int(self.window) != self.window or self.window % 2 == 0 or self.window < 1:
            raise ValueError(f"window must be a positive odd integer, got {self.window}")

    def to_dict(self) -> dict:
        return asdict(self)


def normalize_chroma(img: LhcImage) -> np.ndarray:
    return np.clip(img.chroma / CHROMA_MAX, 0.0, 1.0)


def normalize_lightness(img: LhcImage) -> np.ndarray:
    return np.clip(img.L / 100.0, 0.0, 1.0)


def _check_planes(x, y, window):
    for p in (x, y):
        if not np.issubdtype(np.asarray(p).dtype, np.floating):
            # Integer planes are almost always hue steps, which are circular.
            raise TypeError("ssim_score takes linear float planes; hue is circular")
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionMismatchError(f"plane shapes differ: {x.shape} vs {y.shape}")
    if x.ndim != 2:
        raise ValueError(f"expected 2D planes, got shape {x.shape}")
    if min(x.shape) < window:
        raise ImageTooSmallError(f"plane {x.shape} smaller than the {window}x{window} window")
    return x, y


def ssim_components(x, y, params: SsimParams | None = None):
    """Local luminance, contrast and structure comparison maps."""
    params = params or SsimParams()
    x, y = _check_planes(x, y, params.window)
    c1 = (params.k1 * params.dynamic_range) ** 2
    c2 = (params.k2 * params.dynamic_range) ** 2
    c3 = c2 / 2.0

    def filt(p):
        return filter_valid(p, params.window, params.sigma)

    mu_x, mu_y = filt(x), filt(y)
    var_x = np.maximum(filt(x * x) - mu_x * mu_x, 0.0)
    var_y = np.maximum(filt(y * y) - mu_y * mu_y, 0.0)
    cov = filt(x * y) - mu_x * mu_y
    sd_x, sd_y = np.sqrt(var_x), np.sqrt(var_y)

    lum = (2.0 * mu_x * mu_y + c1) / (mu_x * mu_x + mu_y * mu_y + c1)
    con = (2.0 * sd_x * sd_y + c2) / (var_x + var_y + c2)
    struct = (cov + c3) / (sd_x * sd_y + c3)
    return lum, con, struct


def ssim_score(x, y, params: SsimParams | None = None) -> tuple[float, np.ndarray]:
    """Mean SSIM and the per-window SSIM map (valid mode, so smaller than x)."""
    lum, con, struct = ssim_components(x, y, params)
    ssim_map = lum * con * struct
    return float(np.mean(ssim_map)), ssim_map
