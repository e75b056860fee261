"""Chroma-gated, normalized and spatially weighted hue-gradient fields.

Gradients are taken along the two one-pixel diagonals. For a plane of
``H x W`` pixels each field is ``(H - 1) x (W - 1)``; the Gaussian stage then
shrinks it by ``window - 1`` per axis.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np
from scipy.special import expit

from .color import HUE_STEPS, LhcImage
from .errors import ImageTooSmallError
from .filters import filter_valid


class Direction(str, enum.Enum):
    DIAG_DOWN_RIGHT = "diag_down_right"
    DIAG_DOWN_LEFT = "diag_down_left"


DIRECTIONS = (Direction.DIAG_DOWN_RIGHT, Direction.DIAG_DOWN_LEFT)


class Stage(str, enum.Enum):
    GATED = "gated"
    NORMALIZED = "normalized"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class ShsmParams:
    """Hyper-parameters of the hue similarity measure.

    ``c0``/``k_c`` set the chroma gate, ``h0``/``k_h`` the gradient logistic
    (both in 8-bit hue steps), ``sigma``/``window`` the Gaussian weighting and
    ``epsilon`` the stabiliser of the final comparison.
    """

    c0: float = 5.0
    k_c: float = 1.0
    h0: float = 5.0
    k_h: float = 1.0
    sigma: float = 1.5
    window: int = 11
    epsilon: float = 0.03

    def __post_init__(self):
        for name in ("c0", "k_c", "h0", "k_h", "sigma", "epsilon"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be a positive finite number, got {value}")
        if int(self.window) != self.window or self.window < 3 or self.window % 2 == 0:
            raise ValueError(f"window must be an odd integer >= 3, got {self.window}")
        object.__setattr__(self, "window", int(self.window))

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class GradientField:
    direction: Direction
    values: np.ndarray
    stage: Stage = Stage.GATED


def angle_diff(h1, h2):
    """Shorter arc between hue steps on the 256-step circle, in [0, 128]."""
    d = np.abs(np.asarray(h1, dtype=np.int64) - np.asarray(h2, dtype=np.int64)) % HUE_STEPS
    out = np.minimum(d, HUE_STEPS - d)
    return int(out) if out.ndim == 0 else out


def chroma_gate(c, params: ShsmParams):
    return expit(params.k_c * (np.asarray(c, dtype=np.float64) - params.c0))


def diagonal_pairs(plane: np.ndarray, direction: Direction) -> tuple[np.ndarray, np.ndarray]:
    """The two endpoint planes of every diagonal step in `direction`."""
    if direction is Direction.DIAG_DOWN_RIGHT:
        return plane[:-1, :-1], plane[1:, 1:]
    return plane[:-1, 1:], plane[1:, :-1]


def hue_steps(img: LhcImage, direction: Direction) -> tuple[np.ndarray, np.ndarray]:
    """Raw circular hue differences and the smaller endpoint chroma per step."""
    h, w = img.shape
    if h < 2 or w < 2:
        raise ImageTooSmallError(f"need at least a 2x2 image for diagonal gradients, got {h}x{w}")
    h1, h2 = diagonal_pairs(img.hue_u8, direction)
    c1, c2 = diagonal_pairs(img.chroma, direction)
    return angle_diff(h1, h2), np.minimum(c1, c2)


def gated_gradients(img: LhcImage, params: ShsmParams) -> tuple[GradientField, GradientField]:
    """Circular hue differences scaled by the chroma gate.

    The gate sees the lower chroma of the two endpoints: once either end is
    near-achromatic its hue carries no visible information.
    """
    fields = []
    for direction in DIRECTIONS:
        diff, min_chroma = hue_steps(img, direction)
        fields.append(GradientField(direction, diff * chroma_gate(min_chroma, params)))
    return fields[0], fields[1]


def normalize_gradients(field: GradientField, params: ShsmParams) -> GradientField:
    values = expit(params.k_h * (field.values - params.h0))
    return GradientField(field.direction, values, Stage.NORMALIZED)


def spatial_weight(field: GradientField, params: ShsmParams) -> GradientField:
    values = filter_valid(field.values, params.window, params.sigma)
    return GradientField(field.direction, values, Stage.WEIGHTED)


def weighted_fields(img: LhcImage, params: ShsmParams) -> tuple[GradientField, GradientField]:
    """Run all three stages for both diagonals."""
    h, w = img.shape
    if h < params.window + 1 or w < params.window + 1:
        raise ImageTooSmallError(
            f"image {w}x{h} too small for a {params.window}x{params.window} window "
            f"(need at least {params.window + 1} pixels per side)"
        )
    return tuple(
        spatial_weight(normalize_gradients(f, params), params)
        for f in gated_gradients(img, params)
    )
