"""Command-line front end.

    shsm compare GT CL [--json out.json] [--maps dir/] [metric flags]
    shsm batch manifest.csv [--json out.json] [--summary out.csv]
    shsm analyze corpus_dir/ [--c0-list 1,2,...,10] [--out hist.csv]

Exit codes: 0 success, 1 usage error, 2 input error, 3 partial batch failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import analysis, report
from .errors import InputError
from .hue_field import ShsmParams

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_PARTIAL = 0, 1, 2, 3

logger = logging.getLogger("shsm")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list[float]:
    try:
        values = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def _add_metric_flags(p: argparse.ArgumentParser) -> None:
    d = ShsmParams()
    g = p.add_argument_group("metric parameters")
    g.add_argument("--c0", type=float, default=d.c0, help="chroma gate midpoint (default %(default)s)")
    g.add_argument("--kc", type=float, default=d.k_c, help="chroma gate slope (default %(default)s)")
    g.add_argument("--h0", type=float, default=d.h0, help="hue-gradient logistic midpoint (default %(default)s)")
    g.add_argument("--kh", type=float, default=d.k_h, help="hue-gradient logistic slope (default %(default)s)")
    g.add_argument("--sigma", type=float, default=d.sigma, help="Gaussian std-dev in pixels (default %(default)s)")
    g.add_argument("--window", type=int, default=d.window, help="Gaussian window side (default %(default)s)")
    g.add_argument("--epsilon", type=float, default=d.epsilon, help="stabiliser (default %(default)s)")


def _params(args) -> ShsmParams:
    return ShsmParams(c0=args.c0, k_c=args.kc, h0=args.h0, k_h=args.kh,
                      sigma=args.sigma, window=args.window, epsilon=args.epsilon)


def _options(args) -> report.CompareOptions:
    maps = getattr(args, "maps", None)
    return report.CompareOptions(
        shsm=_params(args),
        circular_hue_mse=args.circular_hue_mse,
        maps_dir=Path(maps) if maps else None,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shsm", description="Full-reference colourisation assessment (hue SHSM + chroma SSIM).")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", help="score one colourisation against its ground truth")
    p.add_argument("gt")
    p.add_argument("cl")
    p.add_argument("--json", help="write the report as JSON ('-' for stdout)")
    p.add_argument("--maps", help="directory for per-pixel similarity map PNGs")
    p.add_argument("--circular-hue-mse", action="store_true",
                   help="wrap-aware hue MSE instead of the naive 8-bit difference")
    _add_metric_flags(p)

    p = sub.add_parser("batch", help="score every (gt_path, cl_path) row of a CSV manifest")
    p.add_argument("manifest")
    p.add_argument("--json", help="write the reports as a JSON array ('-' for stdout)")
    p.add_argument("--summary", help="write min/Q1/median/Q3/max per column as CSV")
    p.add_argument("--maps", help="directory for per-pixel similarity map PNGs")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--circular-hue-mse", action="store_true")
    _add_metric_flags(p)

    p = sub.add_parser("analyze", help="hue-gradient histograms over an image directory")
    p.add_argument("corpus_dir")
    p.add_argument("--c0-list", type=_float_list, default=[float(c) for c in range(1, 11)],
                   help="comma-separated gate midpoints (default 1,...,10)")
    p.add_argument("--out", default="hist.csv", help="histogram CSV path (default %(default)s)")
    _add_metric_flags(p)
    return parser


def _emit_json(text: str, dest: str | None) -> None:
    if dest is None:
        return
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _format_row(r: report.ScoreReport) -> str:
    def f(v, spec):
        return "n/a" if v is None else format(v, spec)

    return (
        f"{r.cl_path}\n"
        f"             MSE        PSNR       proposed\n"
        f"  hue     {f(r.mse_hue, '10.2f')}  {f(r.psnr_hue, '8.2f')}dB  {f(r.shsm_hue, '.3f')}\n"
        f"  chroma  {f(r.mse_chroma, '10.2f')}  {f(r.psnr_chroma, '8.2f')}dB  {f(r.ssim_chroma, '.3f')}\n"
        f"  combined {f(r.combined, '.3f')}   ssim_L {f(r.ssim_L, '.3f')}"
    )


def _cmd_compare(args) -> int:
    rep = report.compare(args.gt, args.cl, _options(args))
    _emit_json(report.reports_to_json(rep), args.json)
    if args.json != "-":
        print(_format_row(rep))
    return EXIT_OK


def _cmd_batch(args) -> int:
    result = report.batch_compare(args.manifest, _options(args), workers=args.workers)
    _emit_json(report.reports_to_json(result.reports), args.json)
    if args.summary:
        report.write_summary_csv(result, args.summary)
    if args.json != "-":
        for col in ("shsm_hue", "ssim_chroma", "combined"):
            if col in result.summary:
                s = result.summary[col]
                print(f"{col:12s} " + "  ".join(f"{k}={s[k]:.3f}" for k in report.SUMMARY_STATS))
    for gt, cl, err in result.failures:
        print(f"FAILED {gt} {cl}: {err}", file=sys.stderr)
    if not result.reports:
        return EXIT_INPUT
    return EXIT_PARTIAL if result.failures else EXIT_OK


def _cmd_analyze(args) -> int:
    series = report.analyze(args.corpus_dir, args.c0_list, _params(args), out=args.out)
    if series and series[0].skipped:
        for p in series[0].skipped:
            print(f"skipped unreadable image: {p}", file=sys.stderr)
    print(f"{len(series)} series over {series[0].image_count} images -> {args.out}")
    print(f"{'c0':>12s}  {'bins 0-2':>9s}  {'bins 3-9':>9s}  {'bins >9':>9s}  max bin>9  <1% per bin")
    for s in series:
        m = analysis.summarize(s)
        verdict = "satisfied" if m["rare_edges_ok"] else "violated"
        print(f"{m['c0_label']:>12s}  {m['bins_0_2']:8.2f}%  {m['bins_3_9']:8.2f}%  "
              f"{m['bins_gt_9']:8.2f}%  {m['max_bin_gt_9']:8.3f}%  {verdict}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    handler = {"compare": _cmd_compare, "batch": _cmd_batch, "analyze": _cmd_analyze}[args.command]
    try:
        return handler(args)
    except InputError as exc:
        print(f"shsm: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:  # invalid parameter values
        print(f"shsm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
