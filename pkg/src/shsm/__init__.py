"""Full-reference colourisation assessment.

Hue is scored with the spatial hue similarity measure (SHSM), which compares
chroma-gated hue-gradient structure and is blind to a global hue rotation;
chroma is scored with SSIM. MSE/PSNR baselines and the gradient-histogram
study used to set the gate midpoint are included.
"""

from .color import (
    LabImage,
    LhcImage,
    RgbImage,
    decode_image,
    lab_to_lhc,
    lab_to_srgb,
    lhc_to_lab,
    load_lhc,
    rgb_to_lhc,
    rotate_hue,
    srgb_to_lab,
)
from .hue_field import (
    Direction,
    GradientField,
    ShsmParams,
    angle_diff,
    chroma_gate,
    gated_gradients,
    normalize_gradients,
    spatial_weight,
)
from .metric import ShsmResult, SimilarityMap, combined_score, shsm_map, shsm_score
from .ssim import SsimParams, normalize_chroma, ssim_score
from .baselines import Channel, mse, psnr
from .analysis import HistogramSeries, image_gradient_histogram, sweep_c0
from .report import CompareOptions, ScoreReport, batch_compare, compare, evaluate

__version__ = "0.1.0"
