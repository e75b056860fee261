"""Hue-gradient histograms over an image set, swept across chroma-gate midpoints.

This is the procedure used to pick ``c0``: pool both diagonal gradient fields
of every image into integer bins 0..128, express each image's histogram as a
percentage of its gradient pixels, then take the per-bin mean and standard
deviation across images.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .color import LhcImage, load_lhc
from .errors import InputError
from .hue_field import DIRECTIONS, ShsmParams, chroma_gate, hue_steps

logger = logging.getLogger(__name__)

N_BINS = 129  # gradient magnitudes 0..128 on the 256-step circle
UNPROCESSED = "unprocessed"
CSV_COLUMNS = ("c0_label", "bin", "percent_mean", "percent_std", "image_count")


@dataclass(frozen=True)
class HistogramSeries:
    """Per-bin mean/std (in percent of pixels) across `image_count` images."""

    c0_label: str
    percent_mean: np.ndarray
    percent_std: np.ndarray
    image_count: int
    skipped: tuple[str, ...] = field(default=())

    @property
    def bins(self) -> np.ndarray:
        return np.arange(N_BINS)

    def mass(self, lo: int, hi: int | None = None) -> float:
        """Mean percentage of pixels with bin in [lo, hi]."""
        hi = N_BINS - 1 if hi is None else hi
        return float(self.percent_mean[lo : hi + 1].sum())


def c0_label(c0: float | None) -> str:
    return UNPROCESSED if c0 is None else format(float(c0), "g")


def _bin_counts(values: Iterable[np.ndarray]) -> np.ndarray:
    counts = np.zeros(N_BINS, dtype=np.int64)
    for v in values:
        idx = np.floor(np.asarray(v, dtype=np.float64) + 0.5).astype(np.int64)
        counts += np.bincount(np.clip(idx, 0, N_BINS - 1).ravel(), minlength=N_BINS)
    return counts


def _percentages(counts: np.ndarray) -> np.ndarray:
    return counts * (100.0 / counts.sum())


def image_gradient_histogram(img: LhcImage, c0: float | None, params: ShsmParams | None = None) -> np.ndarray:
    """Percentage of diagonal gradient pixels falling in each bin 0..128.

    ``c0=None`` histograms the raw circular differences with no chroma gate.
    Otherwise the gate uses `c0` with the slope from `params`.
    """
    return _percentages(_bin_counts(_gradient_values(_raw_steps(img), c0, params or ShsmParams())))


def _raw_steps(img: LhcImage):
    return [hue_steps(img, d) for d in DIRECTIONS]


def _gradient_values(steps, c0, params):
    if c0 is None:
        return [diff for diff, _ in steps]
    gp = replace(params, c0=float(c0))
    return [diff * chroma_gate(min_c, gp) for diff, min_c in steps]


def histograms_for_images(
    images: Sequence[LhcImage], c0_values: Sequence[float], params: ShsmParams | None = None
) -> list[HistogramSeries]:
    """Unprocessed series followed by one series per `c0_values` entry."""
    params = params or ShsmParams()
    labels = [None, *c0_values]
    per_image = np.empty((len(labels), len(images), N_BINS))
    for j, img in enumerate(images):
        steps = _raw_steps(img)
        for i, c0 in enumerate(labels):
            per_image[i, j] = _percentages(_bin_counts(_gradient_values(steps, c0, params)))
    return [
        HistogramSeries(c0_label(c0), per_image[i].mean(axis=0), per_image[i].std(axis=0), len(images))
        for i, c0 in enumerate(labels)
    ]


def sweep_c0(paths: Sequence, c0_values: Sequence[float], params: ShsmParams | None = None) -> list[HistogramSeries]:
    """Histogram series for every readable image in `paths`.

    Unreadable files are skipped with a warning and listed in each series'
    ``skipped`` field. At least two readable images are required.
    """
    if not c0_values:
        raise ValueError("c0_values must not be empty")
    images, skipped = [], []
    for p in paths:
        try:
            images.append(load_lhc(p))
        except InputError as exc:
            logger.warning("skipping %s: %s", p, exc)
            skipped.append(str(p))
    if len(images) < 2:
        raise InputError(f"need at least 2 readable images, found {len(images)}")
    series = histograms_for_images(images, c0_values, params)
    return [replace(s, skipped=tuple(skipped)) for s in series]


def image_paths(corpus_dir) -> list[Path]:
    """PNG/JPEG files directly inside `corpus_dir`, in lexicographic order."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise InputError(f"{corpus_dir}: not a readable directory")
    exts = {".png", ".jpg", ".jpeg"}
    return sorted(p for p in corpus_dir.iterdir() if p.is_file() and p.suffix.lower() in exts)


def write_histogram_csv(series: Sequence[HistogramSeries], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for s in series:
            for b in range(N_BINS):
                w.writerow([s.c0_label, b, repr(float(s.percent_mean[b])), repr(float(s.percent_std[b])), s.image_count])


def read_histogram_csv(path) -> list[HistogramSeries]:
    rows: dict[str, list] = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            rows.setdefault(row["c0_label"], []).append(row)
    out = []
    for label, rs in rows.items():
        rs.sort(key=lambda r: int(r["bin"]))
        out.append(
            HistogramSeries(
                label,
                np.array([float(r["percent_mean"]) for r in rs]),
                np.array([float(r["percent_std"]) for r in rs]),
                int(rs[0]["image_count"]),
            )
        )
    return out


def summarize(series: HistogramSeries) -> dict:
    """Mass in the flat (0-2), texture (3-9) and edge (>9) ranges."""
    tail = series.percent_mean[10:]
    return {
        "c0_label": series.c0_label,
        "bins_0_2": series.mass(0, 2),
        "bins_3_9": series.mass(3, 9),
        "bins_gt_9": series.mass(10),
        "max_bin_gt_9": float(tail.max()),
        "rare_edges_ok": bool(np.all(tail < 1.0)),
    }
