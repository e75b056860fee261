"""Image decoding and the sRGB -> CIELAB -> lightness/hue/chroma pipeline.

Hue is stored on a 256-step circle (``hue_u8``) covering [-pi, pi): step 0 is
-pi, step 128 is angle 0 and step 192 is +pi/2. All gradient arithmetic
downstream is defined on this circle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import DecodeError, ImageTooSmallError

MIN_SIDE = 12
HUE_STEPS = 256
CHROMA_MAX = 181.02  # |(a, b)| for a, b in [-128, 127], rounded up

# sRGB primaries (IEC 61966-2-1), D65 white, 2 degree observer.
_RGB_TO_XYZ = np.array(
    [
        [0.4124564, 0.3575761, 0.1804375],
        [0.2126729, 0.7151522, 0.0721750],
        [0.0193339, 0.1191920, 0.9503041],
    ]
)
_XYZ_TO_RGB = np.linalg.inv(_RGB_TO_XYZ)
D65_WHITE = np.array([0.95047, 1.0, 1.08883])

_EPS = (6.0 / 29.0) ** 3
_KAPPA = 3.0 * (6.0 / 29.0) ** 2


@dataclass(frozen=True)
class RgbImage:
    """8-bit sRGB pixels, shape ``(height, width, 3)``."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3:
            raise ValueError(f"expected (H, W, 3) pixels, got shape {px.shape}")
        if px.shape[0] < MIN_SIDE or px.shape[1] < MIN_SIDE:
            raise ImageTooSmallError(
                f"image too small: {px.shape[1]}x{px.shape[0]}, "
                f"need at least {MIN_SIDE}x{MIN_SIDE}"
            )
        object.__setattr__(self, "pixels", px.astype(np.uint8, copy=False))

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]


@dataclass(frozen=True)
class LabImage:
    L: np.ndarray
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        if not (np.shape(self.L) == np.shape(self.a) == np.shape(self.b)):
            raise ValueError("L, a and b planes must share dimensions")


@dataclass(frozen=True)
class LhcImage:
    """Lightness, quantized circular hue and chroma planes.

    Attributes
    ----------
    L : ndarray of float
        Lightness in [0, 100].
    hue_u8 : ndarray of uint8
        Hue angle on the 256-step circle; 0 and 255 are neighbours.
    chroma : ndarray of float
        Euclidean norm of (a, b), always >= 0.
    """

    L: np.ndarray
    hue_u8: np.ndarray
    chroma: np.ndarray

    def __post_init__(self):
        hue = np.asarray(self.hue_u8)
        if not (np.shape(self.L) == hue.shape == np.shape(self.chroma)):
            raise ValueError("L, hue and chroma planes must share dimensions")
        if hue.ndim != 2:
            raise ValueError(f"planes must be 2D, got shape {hue.shape}")
        if np.issubdtype(hue.dtype, np.floating):
            raise TypeError("hue_u8 must hold integer hue steps")
        if hue.size and (hue.min() < 0 or hue.max() >= HUE_STEPS):
            raise ValueError("hue steps must lie in [0, 255]")
        if np.any(np.asarray(self.chroma) < 0):
            raise ValueError("chroma must be non-negative")
        object.__setattr__(self, "hue_u8", hue.astype(np.uint8, copy=False))
        object.__setattr__(self, "L", np.asarray(self.L, dtype=np.float64))
        object.__setattr__(self, "chroma", np.asarray(self.chroma, dtype=np.float64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.hue_u8.shape


def decode_image(path) -> RgbImage:
    """Read a PNG or JPEG file as 8-bit sRGB; any alpha channel is dropped."""
    path = Path(path)
    try:
        with Image.open(path) as im:
            fmt = im.format
            if fmt not in ("PNG", "JPEG"):
                raise DecodeError(f"{path}: unsupported format {fmt!r} (PNG or JPEG only)")
            pixels = np.asarray(im.convert("RGB"))
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        raise DecodeError(f"{path}: cannot read file ({exc.__class__.__name__})") from exc
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise DecodeError(f"{path}: not a readable image ({exc})") from exc
    return RgbImage(pixels)


def save_rgb(img: RgbImage, path) -> None:
    Image.fromarray(img.pixels, mode="RGB").save(path)


def _srgb_to_linear(v: np.ndarray) -> np.ndarray:
    return np.where(v <= 0.04045, v / 12.92, ((v + 0.055) / 1.055) ** 2.4)


def _linear_to_srgb(v: np.ndarray) -> np.ndarray:
    v = np.clip(v, 0.0, 1.0)
    return np.where(v <= 0.0031308, 12.92 * v, 1.055 * v ** (1 / 2.4) - 0.055)


def srgb_to_lab(img: RgbImage) -> LabImage:
    rgb = _srgb_to_linear(img.pixels.astype(np.float64) / 255.0)
    xyz = rgb @ _RGB_TO_XYZ.T / D65_WHITE
    f = np.where(xyz > _EPS, np.cbrt(xyz), xyz / _KAPPA + 4.0 / 29.0)
    L = np.clip(116.0 * f[..., 1] - 16.0, 0.0, 100.0)
    a = 500.0 * (f[..., 0] - f[..., 1])
    b = 200.0 * (f[..., 1] - f[..., 2])
    return LabImage(L, a, b)


def lab_to_srgb(lab: LabImage) -> RgbImage:
    """Inverse conversion, clipped to the sRGB gamut and rounded to 8 bits."""
    fy = (np.asarray(lab.L, dtype=np.float64) + 16.0) / 116.0
    fx = fy + np.asarray(lab.a) / 500.0
    fz = fy - np.asarray(lab.b) / 200.0
    f = np.stack([fx, fy, fz], axis=-1)
    xyz = np.where(f > 6.0 / 29.0, f**3, _KAPPA * (f - 4.0 / 29.0)) * D65_WHITE
    rgb = _linear_to_srgb(xyz @ _XYZ_TO_RGB.T)
    return RgbImage(np.floor(rgb * 255.0 + 0.5).astype(np.uint8))


def angle_to_hue_u8(angle: np.ndarray) -> np.ndarray:
    """Quantize angles in [-pi, pi] to steps, rounding half away from zero."""
    t = (np.asarray(angle, dtype=np.float64) + np.pi) / (2.0 * np.pi) * HUE_STEPS
    return (np.floor(t + 0.5).astype(np.int64) % HUE_STEPS).astype(np.uint8)


def hue_u8_to_angle(hue_u8: np.ndarray) -> np.ndarray:
    return np.asarray(hue_u8, dtype=np.float64) * (2.0 * np.pi / HUE_STEPS) - np.pi


def lab_to_lhc(lab: LabImage) -> LhcImage:
    a = np.asarray(lab.a, dtype=np.float64)
    b = np.asarray(lab.b, dtype=np.float64)
    chroma = np.hypot(a, b)
    # atan2(+-0, +-0) is fixed to 0 so achromatic pixels land on step 128.
    angle = np.where((a == 0) & (b == 0), 0.0, np.arctan2(b, a))
    return LhcImage(np.asarray(lab.L, dtype=np.float64), angle_to_hue_u8(angle), chroma)


def lhc_to_lab(img: LhcImage) -> LabImage:
    angle = hue_u8_to_angle(img.hue_u8)
    return LabImage(img.L, img.chroma * np.cos(angle), img.chroma * np.sin(angle))


def rgb_to_lhc(img: RgbImage) -> LhcImage:
    return lab_to_lhc(srgb_to_lab(img))


def load_lhc(path) -> LhcImage:
    return rgb_to_lhc(decode_image(path))


def rotate_hue(img: LhcImage, delta: int) -> LhcImage:
    """Shift every hue by `delta` steps around the circle (taken mod 256)."""
    hue = (img.hue_u8.astype(np.int64) + int(delta)) % HUE_STEPS
    return replace(img, hue_u8=hue.astype(np.uint8))
