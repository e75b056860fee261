"""Pairwise and batch scoring, report serialization and map export."""

from __future__ import annotations

import csv
import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np
from PIL import Image

from . import analysis
from .baselines import Channel, channel_plane, mse, psnr_from_mse, PEAK
from .color import LhcImage, load_lhc
from .errors import DimensionMismatchError, InputError
from .hue_field import ShsmParams
from .metric import ShsmResult, combined_score, shsm_score
from .ssim import SsimParams, normalize_chroma, normalize_lightness, ssim_score

logger = logging.getLogger(__name__)

REPORT_FIELDS = (
    "gt_path",
    "cl_path",
    "shsm_hue",
    "ssim_chroma",
    "combined",
    "mse_hue",
    "mse_chroma",
    "psnr_hue",
    "psnr_chroma",
    "ssim_L",
    "shsm_hue_directions",
    "params",
    "map_paths",
)
SUMMARY_COLUMNS = (
    "shsm_hue",
    "ssim_chroma",
    "combined",
    "mse_hue",
    "mse_chroma",
    "psnr_hue",
    "psnr_chroma",
    "ssim_L",
)
SUMMARY_STATS = ("min", "q1", "median", "q3", "max")


@dataclass(frozen=True)
class CompareOptions:
    shsm: ShsmParams = field(default_factory=ShsmParams)
    ssim: SsimParams = field(default_factory=SsimParams)
    circular_hue_mse: bool = False
    ssim_lightness: bool = True
    maps_dir: Path | None = None

    def snapshot(self) -> dict:
        return {
            "shsm": self.shsm.to_dict(),
            "ssim": self.ssim.to_dict(),
            "circular_hue_mse": self.circular_hue_mse,
        }


@dataclass
class ScoreReport:
    gt_path: str
    cl_path: str
    shsm_hue: float
    ssim_chroma: float
    combined: float
    mse_hue: float
    mse_chroma: float
    psnr_hue: float
    psnr_chroma: float
    ssim_L: float | None
    shsm_hue_directions: dict[str, float]
    params: dict
    map_paths: dict[str, str] | None = None

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in REPORT_FIELDS}


@dataclass
class Evaluation:
    """Everything computed for one pair, including the per-pixel maps."""

    report: ScoreReport
    hue: ShsmResult
    chroma_map: np.ndarray


def evaluate(gt: LhcImage, cl: LhcImage, options: CompareOptions | None = None,
             gt_path: str = "", cl_path: str = "") -> Evaluation:
    options = options or CompareOptions()
    if gt.shape != cl.shape:
        raise DimensionMismatchError(
            f"image sizes differ: {gt_path or 'gt'} is {gt.shape[1]}x{gt.shape[0]}, "
            f"{cl_path or 'cl'} is {cl.shape[1]}x{cl.shape[0]}"
        )
    hue = shsm_score(gt, cl, options.shsm)
    chroma, chroma_map = ssim_score(normalize_chroma(gt), normalize_chroma(cl), options.ssim)
    ssim_l = None
    if options.ssim_lightness:
        ssim_l, _ = ssim_score(normalize_lightness(gt), normalize_lightness(cl), options.ssim)

    mse_hue = mse(gt.hue_u8, cl.hue_u8, Channel.HUE, circular=options.circular_hue_mse)
    mse_chroma = mse(gt.chroma, cl.chroma, Channel.CHROMA)
    report = ScoreReport(
        gt_path=str(gt_path),
        cl_path=str(cl_path),
        shsm_hue=hue.score,
        ssim_chroma=chroma,
        combined=combined_score(hue.score, chroma),
        mse_hue=mse_hue,
        mse_chroma=mse_chroma,
        psnr_hue=psnr_from_mse(mse_hue, PEAK[Channel.HUE]),
        psnr_chroma=psnr_from_mse(mse_chroma, PEAK[Channel.CHROMA]),
        ssim_L=ssim_l,
        shsm_hue_directions=hue.direction_scores(),
        params=options.snapshot(),
    )
    return Evaluation(report, hue, chroma_map)


def map_to_png(values: np.ndarray, path) -> None:
    """Similarity map as 8-bit greyscale: 255 is full similarity, negatives clamp to 0."""
    px = np.floor(np.clip(values, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)
    Image.fromarray(px, mode="L").save(path)


def write_maps(ev: Evaluation, maps_dir, stem: str) -> dict[str, str]:
    maps_dir = Path(maps_dir)
    maps_dir.mkdir(parents=True, exist_ok=True)
    planes = {"shsm_hue": ev.hue.combined.values, "ssim_chroma": ev.chroma_map}
    for d, m in ev.hue.directions.items():
        planes[f"shsm_{d.value}"] = m.values
    out = {}
    for name, values in planes.items():
        path = maps_dir / f"{stem}_{name}.png"
        map_to_png(values, path)
        out[name] = str(path)
    return out


def _warn_if_jpeg(path: Path) -> None:
    if path.suffix.lower() in (".jpg", ".jpeg"):
        logger.warning(
            "%s is JPEG: lossy compression discards colour detail and can depress scores", path
        )


def compare(gt_path, cl_path, options: CompareOptions | None = None) -> ScoreReport:
    options = options or CompareOptions()
    gt_path, cl_path = Path(gt_path), Path(cl_path)
    for p in (gt_path, cl_path):
        _warn_if_jpeg(p)
    ev = evaluate(load_lhc(gt_path), load_lhc(cl_path), options, str(gt_path), str(cl_path))
    if options.maps_dir is not None:
        ev.report.map_paths = write_maps(ev, options.maps_dir, f"{gt_path.stem}__{cl_path.stem}")
    return ev.report


def _json_value(v):
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return v
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def reports_to_json(reports: ScoreReport | Sequence[ScoreReport]) -> str:
    """One object for a single report, an array for a batch."""
    if isinstance(reports, ScoreReport):
        payload = _json_value(reports.to_dict())
    else:
        payload = [_json_value(r.to_dict()) for r in reports]
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def report_from_dict(d: dict) -> ScoreReport:
    def num(v):
        return float(v) if isinstance(v, str) else v

    kwargs = {k: d.get(k) for k in REPORT_FIELDS}
    for k in SUMMARY_COLUMNS:
        kwargs[k] = num(kwargs[k])
    return ScoreReport(**kwargs)


# -- batches ---------------------------------------------------------------

def read_manifest(path) -> list[tuple[Path, Path]]:
    path = Path(path)
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or not {"gt_path", "cl_path"} <= set(reader.fieldnames):
                raise InputError(f"{path}: manifest needs a header with gt_path and cl_path")
            rows = [(r["gt_path"], r["cl_path"]) for r in reader]
    except OSError as exc:
        raise InputError(f"{path}: cannot read manifest ({exc})") from exc
    if not rows:
        raise InputError(f"{path}: no pairs")
    base = path.parent
    return [(base / gt.strip(), base / cl.strip()) for gt, cl in rows]


def quantile(values: Sequence[float], q: float) -> float:
    """Linear-interpolated quantile that tolerates infinite entries."""
    v = sorted(values)
    pos = q * (len(v) - 1)
    lo = math.floor(pos)
    hi = math.ceil(pos)
    frac = pos - lo
    if frac == 0 or v[lo] == v[hi]:
        return v[lo]
    return v[lo] + frac * (v[hi] - v[lo])


def summary_statistics(reports: Sequence[ScoreReport]) -> dict[str, dict[str, float]]:
    """Box-plot statistics (min, quartiles, max) for every score column."""
    out = {}
    for col in SUMMARY_COLUMNS:
        vals = [getattr(r, col) for r in reports if getattr(r, col) is not None]
        if not vals:
            continue
        out[col] = {s: quantile(vals, q) for s, q in zip(SUMMARY_STATS, (0, 0.25, 0.5, 0.75, 1))}
    return out


@dataclass
class BatchResult:
    reports: list[ScoreReport]
    failures: list[tuple[str, str, str]]
    summary: dict[str, dict[str, float]]


def batch_compare(manifest, options: CompareOptions | None = None, workers: int = 1) -> BatchResult:
    """Score every manifest pair; failed pairs are recorded and skipped."""
    pairs = read_manifest(manifest)

    def run(pair):
        try:
            return compare(pair[0], pair[1], options), None
        except InputError as exc:  # decode failure, size mismatch, too small
            return None, str(exc)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(run, pairs))
    reports, failures = [], []
    for (gt, cl), (rep, err) in zip(pairs, results):
        if err is None:
            reports.append(rep)
        else:
            logger.error("pair %s, %s failed: %s", gt, cl, err)
            failures.append((str(gt), str(cl), err))
    return BatchResult(reports, failures, summary_statistics(reports))


def write_summary_csv(result: BatchResult, path) -> None:
    cols = [c for c in SUMMARY_COLUMNS if c in result.summary]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["statistic", *cols])
        w.writerow(["count", *[len(result.reports)] * len(cols)])
        for stat in SUMMARY_STATS:
            w.writerow([stat, *[repr(float(result.summary[c][stat])) for c in cols]])


# -- dataset analysis --------------------------------------------------------

def analyze(corpus_dir, c0_list: Sequence[float], params: ShsmParams | None = None,
            out=None) -> list[analysis.HistogramSeries]:
    paths = analysis.image_paths(corpus_dir)
    if len(paths) < 2:
        raise InputError(f"{corpus_dir}: need at least 2 images, found {len(paths)}")
    series = analysis.sweep_c0(paths, c0_list, params)
    if out is not None:
        analysis.write_histogram_csv(series, out)
    return series
