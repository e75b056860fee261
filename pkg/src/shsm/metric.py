"""Spatial hue similarity: contrast-style comparison of weighted hue gradients.

Per pixel and per diagonal the similarity of two gradient values ``a`` and
``b`` is ``(2ab + eps) / (a^2 + b^2 + eps)``, i.e. the contrast term of SSIM.
The two direction maps are multiplied pixelwise and the scalar score is the
mean of that product.

Note that the squares in the denominator are required: with a plain
``a + b + eps`` denominator two identical images would not score 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .color import LhcImage
from .errors import DimensionMismatchError
from .hue_field import Direction, GradientField, ShsmParams, Stage, weighted_fields


@dataclass(frozen=True)
class SimilarityMap:
    values: np.ndarray

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))


@dataclass(frozen=True)
class ShsmResult:
    """Scalar score, the combined per-pixel map and each direction's map."""

    score: float
    combined: SimilarityMap
    directions: dict[Direction, SimilarityMap]

    def direction_scores(self) -> dict[str, float]:
        return {d.value: m.mean for d, m in self.directions.items()}


def shsm_map(gt: GradientField, cl: GradientField, params: ShsmParams) -> SimilarityMap:
    if gt.direction is not cl.direction:
        raise ValueError(f"direction mismatch: {gt.direction.value} vs {cl.direction.value}")
    if gt.values.shape != cl.values.shape:
        raise DimensionMismatchError(
            f"gradient fields differ in shape: {gt.values.shape} vs {cl.values.shape}"
        )
    if gt.stage is not Stage.WEIGHTED or cl.stage is not Stage.WEIGHTED:
        raise ValueError("shsm_map compares spatially weighted fields only")
    a, b = gt.values, cl.values
    # 1 - (a-b)^2/D == (2ab+eps)/D exactly in real arithmetic; this form cannot
    # round above 1 and gives exactly 1 when a == b.
    denom = a * a + b * b + params.epsilon
    return SimilarityMap(1.0 - (a - b) ** 2 / denom)


def shsm_score(gt_img: LhcImage, cl_img: LhcImage, params: ShsmParams | None = None) -> ShsmResult:
    params = params or ShsmParams()
    if gt_img.shape != cl_img.shape:
        raise DimensionMismatchError(
            f"image sizes differ: {gt_img.shape[1]}x{gt_img.shape[0]} "
            f"vs {cl_img.shape[1]}x{cl_img.shape[0]}"
        )
    gt_fields = weighted_fields(gt_img, params)
    cl_fields = weighted_fields(cl_img, params)
    maps = {g.direction: shsm_map(g, c, params) for g, c in zip(gt_fields, cl_fields)}
    product = np.prod([m.values for m in maps.values()], axis=0)
    return ShsmResult(float(np.mean(product)), SimilarityMap(product), maps)


def combined_score(hue_score: float, chroma_score: float) -> float:
    """Overall similarity: hue score times chroma score."""
    return float(hue_score) * float(chroma_score)
