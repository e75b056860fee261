"""Pixel-difference baselines (MSE, PSNR) per channel.

Hue is compared as plain 8-bit numbers by default, so steps 0 and 255 count as
255 apart. That naive behaviour is the point of the baseline; pass
``circular=True`` for the wrap-aware variant; the naive form is the default.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .color import CHROMA_MAX, LhcImage
from .errors import DimensionMismatchError
from .hue_field import angle_diff


class Channel(str, enum.Enum):
    HUE = "hue_u8"
    CHROMA = "chroma"
    L = "L"


PEAK = {Channel.HUE: 255.0, Channel.CHROMA: CHROMA_MAX, Channel.L: 100.0}


def channel_plane(img: LhcImage, channel: Channel) -> np.ndarray:
    return {Channel.HUE: img.hue_u8, Channel.CHROMA: img.chroma, Channel.L: img.L}[Channel(channel)]


def mse(x, y, channel: Channel, circular: bool = False) -> float:
    channel = Channel(channel)
    x, y = np.asarray(x), np.asarray(y)
    if x.shape != y.shape:
        raise DimensionMismatchError(f"plane shapes differ: {x.shape} vs {y.shape}")
    if circular:
        if channel is not Channel.HUE:
            raise ValueError("circular MSE only applies to the hue channel")
        d = angle_diff(x, y).astype(np.float64)
    else:
        d = x.astype(np.float64) - y.astype(np.float64)
    return float(np.mean(d * d))


def psnr_from_mse(err: float, peak: float) -> float:
    """PSNR in dB; identical planes give ``math.inf``."""
    if err == 0:
        return math.inf
    return 10.0 * math.log10(peak * peak / err)


def psnr(x, y, channel: Channel, circular: bool = False) -> float:
    channel = Channel(channel)
    return psnr_from_mse(mse(x, y, channel, circular), PEAK[channel])
