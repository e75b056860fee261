#!/usr/bin/env python3
"""Regenerate the committed synthetic comparison fixtures in tests/fixtures/.

    python scripts/make_fixtures.py [out_dir]
"""

import sys
from pathlib import Path

from shsm.color import save_rgb
from shsm.synthetic import table_fixtures


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = Path(argv[0]) if argv else Path(__file__).resolve().parents[1] / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    for name, img in table_fixtures().items():
        save_rgb(img, out / f"{name}.png")
        print(out / f"{name}.png")
    return 0


if __name__ == "__main__":
    sys.exit(main())
