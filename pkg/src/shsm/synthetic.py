"""Deterministic synthetic scenes for exercising the metrics.

A *scene* is a label map of a few segments, each with its own lightness,
chroma and hue plus a mild texture. Plausible recolourings change each
segment's hue as a whole; implausible ones break the hue structure.
"""

from __future__ import annotations

import itertools

import numpy as np

from .color import (
    HUE_STEPS,
    LabImage,
    LhcImage,
    RgbImage,
    angle_to_hue_u8,
    hue_u8_to_angle,
    lab_to_srgb,
    rgb_to_lhc,
)


def segment_labels(size: int = 96) -> np.ndarray:
    """Background plus a rectangle, a disc, a diagonal band and a small square."""
    yy, xx = np.mgrid[0:size, 0:size]
    labels = np.zeros((size, size), dtype=np.int64)
    labels[(yy > size * 0.55) & (xx > size * 0.08) & (xx < size * 0.5)] = 1
    labels[(yy - size * 0.3) ** 2 + (xx - size * 0.68) ** 2 < (size * 0.2) ** 2] = 2
    band = np.abs((yy - xx) - size * 0.05) < size * 0.06
    labels[band & (labels == 0)] = 3
    labels[(yy > size * 0.62) & (yy < size * 0.85) & (xx > size * 0.62) & (xx < size * 0.85)] = 4
    return labels


BASE_HUES_DEG = (40.0, 160.0, 280.0, 100.0, 220.0)
BASE_L = (62.0, 55.0, 66.0, 58.0, 50.0)
BASE_CHROMA = (28.0, 30.0, 26.0, 32.0, 29.0)


def _texture(shape, seed: int, freq: float) -> np.ndarray:
    """Smooth pseudo-random texture in [-1, 1]."""
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0 : shape[0], 0 : shape[1]].astype(np.float64)
    t = np.zeros(shape)
    for _ in range(4):
        fy, fx = rng.uniform(0.3, 1.0, 2) * freq
        py, px = rng.uniform(0, 2 * np.pi, 2)
        t += np.sin(fy * yy + py) * np.cos(fx * xx + px)
    return t / 4.0


def scene_lab(labels: np.ndarray, hues_deg=BASE_HUES_DEG, chroma_scale: float = 1.0,
              hue_texture_deg: float = 4.0) -> LabImage:
    """Lab planes for a segmented scene with the given per-segment hues."""
    L = np.take(np.asarray(BASE_L), labels) + 3.0 * _texture(labels.shape, 1, 0.35)
    chroma = np.take(np.asarray(BASE_CHROMA), labels) + 2.0 * _texture(labels.shape, 2, 0.3)
    chroma = np.maximum(chroma * chroma_scale, 0.0)
    hue = np.deg2rad(np.take(np.asarray(hues_deg, dtype=np.float64), labels)
                     + hue_texture_deg * _texture(labels.shape, 3, 0.25))
    return LabImage(L, chroma * np.cos(hue), chroma * np.sin(hue))


def plausible_hue_sets(n: int = 4, min_sep_deg: float = 35.0) -> list[tuple[float, ...]]:
    """`n` per-segment hue assignments that keep every pair of segments distinct.

    Each set permutes the base hues and adds a rotation, so every segment's
    hue changes by a different amount.
    """
    out = []
    perms = itertools.permutations(range(len(BASE_HUES_DEG)))
    next(perms)  # skip the identity
    for k, perm in enumerate(perms):
        hues = tuple((BASE_HUES_DEG[i] + 23.0 * (k + 1)) % 360.0 for i in perm)
        diffs = [abs((a - b + 180.0) % 360.0 - 180.0) for a, b in itertools.combinations(hues, 2)]
        if min(diffs) >= min_sep_deg:
            out.append(hues)
        if len(out) == n:
            break
    return out


def stripe_lab(lab: LabImage, shift_deg: float = 45.0, width: int = 2) -> LabImage:
    """Rotate the hue of every other `width`-pixel column stripe by `shift_deg`."""
    cols = np.arange(lab.a.shape[1])
    mask = ((cols // width) % 2 == 1)[None, :]
    t = np.deg2rad(shift_deg)
    a2 = lab.a * np.cos(t) - lab.b * np.sin(t)
    b2 = lab.a * np.sin(t) + lab.b * np.cos(t)
    return LabImage(lab.L, np.where(mask, a2, lab.a), np.where(mask, b2, lab.b))


def greyscale_lab(lab: LabImage) -> LabImage:
    return LabImage(lab.L, np.zeros_like(lab.a), np.zeros_like(lab.b))


def table_fixtures(size: int = 96) -> dict[str, RgbImage]:
    """Ground truth, four plausible re-hues, a stripe corruption and a grey version."""
    labels = segment_labels(size)
    gt = scene_lab(labels)
    out = {"gt": lab_to_srgb(gt)}
    for i, hues in enumerate(plausible_hue_sets(4), start=1):
        out[f"rehue_{i}"] = lab_to_srgb(scene_lab(labels, hues))
    out["stripes"] = lab_to_srgb(stripe_lab(gt))
    out["greyscale"] = lab_to_srgb(greyscale_lab(gt))
    return out


def lhc_plane_image(hue_u8, chroma, L=50.0) -> LhcImage:
    hue = np.asarray(hue_u8).astype(np.int64) % HUE_STEPS
    return LhcImage(np.broadcast_to(np.asarray(L, float), hue.shape).copy(), hue.astype(np.uint8),
                    np.broadcast_to(np.asarray(chroma, float), hue.shape).copy())


def stripe_lhc(size: int = 64, separation: int = 64, base: int = 20, chroma: float = 100.0,
               width: int = 2) -> LhcImage:
    """Uniform hue with every other `width`-column stripe shifted by `separation` steps."""
    cols = np.arange(size)
    row = base + separation * ((cols // width) % 2)
    return lhc_plane_image(np.tile(row, (size, 1)), chroma)


def near_achromatic_lhc(size: int = 64, seed: int = 0, max_ab: int = 1) -> LhcImage:
    """Random integer a, b in 0..max_ab: hue jumps wildly while chroma stays tiny.

    With the default ``max_ab=1`` this is the (0,0) -> (0,1) / (1,0) case that
    produces the quarter-turn (64-step) spike in ungated histograms.
    """
    rng = np.random.default_rng(seed)
    a = rng.integers(0, max_ab + 1, (size, size)).astype(float)
    b = rng.integers(0, max_ab + 1, (size, size)).astype(float)
    angle = np.where((a == 0) & (b == 0), 0.0, np.arctan2(b, a))
    return LhcImage(np.full((size, size), 50.0), angle_to_hue_u8(angle), np.hypot(a, b))


def hue_shifted_rgb(img: RgbImage, delta: int, search: int = 4) -> RgbImage:
    """Recolour a few-colour image so every colour's hue step moves by exactly `delta`.

    For each distinct colour a nearby sRGB value is searched whose quantized
    hue is the source hue plus `delta`, keeping lightness and chroma as close
    as possible. Intended for flat-colour test images; raises if no exact
    match exists within `search` levels per channel.
    """
    px = img.pixels.reshape(-1, 3)
    colours, inverse = np.unique(px, axis=0, return_inverse=True)
    src = rgb_to_lhc(_pad_colours(colours))
    src_L, src_c, src_h = (p.reshape(-1) for p in (src.L, src.chroma, src.hue_u8))
    offs = np.array(list(itertools.product(range(-search, search + 1), repeat=3)))
    mapped = np.empty_like(colours)
    for i in range(len(colours)):
        L, c = src_L[i], src_c[i]
        target = (int(src_h[i]) + delta) % HUE_STEPS
        ang = hue_u8_to_angle(target)
        full = np.full((12, 12), 1.0)
        guess = lab_to_srgb(LabImage(L * full, c * np.cos(ang) * full, c * np.sin(ang) * full))
        cand = np.clip(guess.pixels[0, 0].astype(int) + offs, 0, 255)
        lhc = rgb_to_lhc(_pad_colours(cand.astype(np.uint8)))
        n = len(cand)
        hue = lhc.hue_u8.reshape(-1)[:n]
        cost = np.abs(lhc.chroma.reshape(-1)[:n] - c) + np.abs(lhc.L.reshape(-1)[:n] - L)
        cost = np.where(hue == target, cost, np.inf)
        j = int(np.argmin(cost))
        if not np.isfinite(cost[j]):
            raise ValueError(f"no sRGB colour near {tuple(guess.pixels[0, 0])} has hue step {target}")
        mapped[i] = cand[j]
    return RgbImage(mapped[inverse.reshape(-1)].reshape(img.pixels.shape))


def _pad_colours(colours: np.ndarray) -> RgbImage:
    """Lay colours out row-major in a (>=12) x (>=12) image, padding with the last one."""
    n = len(colours)
    side = max(12, int(np.ceil(np.sqrt(n))))
    flat = np.concatenate([colours, np.repeat(colours[-1:], side * side - n, axis=0)])
    return RgbImage(flat.reshape(side, side, 3).astype(np.uint8))
