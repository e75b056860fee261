#!/usr/bin/env python3
"""Cut a desk-scale corpus of natural-image crops from locally installed photos.

The sample photographs bundled with scikit-image, scikit-learn and matplotlib
are the only natural colour images guaranteed to be available offline. Seeded
random crops of them give a reproducible stand-in for a larger dataset:

    python scripts/build_corpus.py out_dir/ --count 100 --size 256
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np
from PIL import Image

PHOTOS = (
    ("skimage", "astronaut.png"),
    ("skimage", "chelsea.png"),
    ("skimage", "coffee.png"),
    ("skimage", "rocket.jpg"),
    ("skimage", "motorcycle_left.png"),
    ("skimage", "motorcycle_right.png"),
    ("sklearn", "china.jpg"),
    ("sklearn", "flower.jpg"),
    ("matplotlib", "grace_hopper.jpg"),
)


def _source_dir(package: str) -> Path:
    if package == "skimage":
        import skimage.data

        return Path(skimage.data.__file__).parent
    if package == "sklearn":
        import sklearn.datasets

        return Path(sklearn.datasets.__file__).parent / "images"
    import matplotlib

    return Path(matplotlib.get_data_path()) / "sample_data"


def available_photos() -> list[Path]:
    found = []
    for package, name in PHOTOS:
        try:
            p = _source_dir(package) / name
        except ImportError:
            continue
        if p.is_file():
            found.append(p)
    return found


def build_corpus(out_dir, count: int = 100, size: int = 256, seed: int = 0) -> list[Path]:
    """Write `count` PNG crops of `size` x `size` into `out_dir`."""
    photos = []
    for p in available_photos():
        with Image.open(p) as im:
            arr = np.asarray(im.convert("RGB"))
        if min(arr.shape[:2]) >= size:
            photos.append((p.stem, arr))
    if not photos:
        raise RuntimeError("no sample photographs large enough were found")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    written = []
    for i in range(count):
        stem, arr = photos[i % len(photos)]
        r = int(rng.integers(0, arr.shape[0] - size + 1))
        c = int(rng.integers(0, arr.shape[1] - size + 1))
        path = out_dir / f"{i:03d}_{stem}.png"
        Image.fromarray(arr[r : r + size, c : c + size]).save(path)
        written.append(path)
    return written


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out_dir")
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--size", type=int, default=256)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    paths = build_corpus(args.out_dir, args.count, args.size, args.seed)
    print(f"wrote {len(paths)} crops to {args.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
