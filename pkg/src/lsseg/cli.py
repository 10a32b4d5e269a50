"""Batch command-line front end.

Segments one grayscale image (PGM P5 or 8-bit gray PNG), writes a
contour overlay and a per-iteration metrics CSV, and in benchmark mode
times the closed-form method against the LBF baseline on the same input.

Exit codes: 0 success, 1 runtime failure (bad file, numerical blowup),
2 usage error.
"""

import argparse
import sys
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Optional

from .errors import FormatError, NumericalBlowupError
from .evolve import Params, dice, run
from .image_io import load_image, save_overlay, write_metrics
from .lbf import LbfParams, lbf_run
from .regularize import Circle, ContourSpec, MaskFile, Rectangle, region_mask

__all__ = [
    "RunConfig",
    "parse_contour",
    "benchmark",
    "format_benchmark",
    "build_parser",
    "main",
]


@dataclass
class RunConfig:
    """Everything one invocation needs, resolved from flags."""

    input_path: str
    method: str
    spec: ContourSpec
    params: Params
    lbf_params: LbfParams = dataclass_field(default_factory=LbfParams)
    out_path: str = ""
    metrics_path: str = ""
    benchmark: bool = False


def parse_contour(text):
    """Parse ``circle:CX,CY,R``, ``rect:X0,Y0,X1,Y1`` or ``mask:PATH``."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "circle":
            cx, cy, r = (float(v) for v in rest.split(","))
            return Circle(cx=cx, cy=cy, r=r)
        if kind == "rect":
            x0, y0, x1, y1 = (float(v) for v in rest.split(","))
            return Rectangle(x0=x0, y0=y0, x1=x1, y1=y1)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"malformed {kind} init {text!r}"
        ) from None
    if kind == "mask":
        if not rest:
            raise argparse.ArgumentTypeError("mask init needs a path: mask:PATH")
        return MaskFile(path=rest)
    raise argparse.ArgumentTypeError(
        f"unknown init {text!r}; expected circle:CX,CY,R, rect:X0,Y0,X1,Y1 or mask:PATH"
    )


def benchmark(I, spec, params, lbf_params=None):
    """Run both methods on the same input and collect the comparison.

    The two runs execute sequentially, share the kernel scale and the
    stopping rule, and report iterations, wall seconds, seconds per
    iteration, total convolutions, and the Dice overlap of their final
    masks.
    """
    if lbf_params is None:
        lbf_params = LbfParams()
    ours = run(I, spec, params)
    baseline = lbf_run(I, spec, params, lbf_params)

    def summarize(result):
        iters = max(result.iterations, 1)
        return {
            "iterations": result.iterations,
            "seconds": result.wall_seconds,
            "seconds_per_iteration": result.wall_seconds / iters,
            "convolutions": result.convolutions,
        }

    return {
        "ours": summarize(ours),
        "lbf": summarize(baseline),
        "dice": dice(ours.mask, baseline.mask),
        "note": (
            "wall-clock seconds are platform-bound; compare the ordering "
            "and ratios between methods, not absolute values"
        ),
    }


def format_benchmark(report):
    lines = [
        f"{'method':<8}{'iters':>8}{'seconds':>12}{'sec/iter':>12}{'convolutions':>14}",
    ]
    for name in ("ours", "lbf"):
        s = report[name]
        lines.append(
            f"{name:<8}{s['iterations']:>8}{s['seconds']:>12.3f}"
            f"{s['seconds_per_iteration']:>12.6f}{s['convolutions']:>14}"
        )
    lines.append(f"dice(ours, lbf) = {report['dice']:.4f}")
    lines.append(f"note: {report['note']}")
    return "\n".join(lines)


def build_parser():
    p = argparse.ArgumentParser(
        prog="lsseg",
        description="Region-based level-set segmentation with closed-form local fitting.",
    )
    p.add_argument("--input", required=True, help="grayscale PGM (P5) or 8-bit PNG")
    p.add_argument("--method", choices=("ours", "lbf"), default="ours")
    p.add_argument(
        "--init",
        type=parse_contour,
        default=None,
        help="circle:CX,CY,R | rect:X0,Y0,X1,Y1 | mask:PATH "
        "(default: centered circle, radius min(w,h)/4)",
    )
    p.add_argument("--t", type=float, default=1.5, help="kernel scale, normally in [1, 2]")
    p.add_argument("--alpha", type=float, default=0.02)
    p.add_argument("--nu", type=float, default=0.001 * 255.0**2)
    p.add_argument("--mu", type=float, default=0.02)
    p.add_argument("--dt", type=float, default=0.025)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--c0", type=float, default=2.0)
    p.add_argument("--max-iters", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--patience", type=int, default=10)
    p.add_argument("--lambda1", type=float, default=1.0)
    p.add_argument("--lambda2", type=float, default=1.0)
    p.add_argument("--out", default=None, help="overlay path (.png or .ppm)")
    p.add_argument("--metrics", default=None, help="metrics CSV path")
    p.add_argument("--benchmark", action="store_true", help="time both methods, print a table")
    p.add_argument(
        "--allow-t-out-of-range",
        action="store_true",
        help="accept --t outside [1, 2]",
    )
    return p


def _config_from_args(args):
    if args.init is None:
        # resolved against the image dimensions later
        spec = None
    else:
        spec = args.init
    params = Params(
        alpha=args.alpha,
        nu=args.nu,
        mu=args.mu,
        dt=args.dt,
        t=args.t,
        epsilon=args.epsilon,
        c0=args.c0,
        max_iters=args.max_iters,
        tol=args.tol,
        patience=args.patience,
    )
    stem = str(Path(args.input).with_suffix(""))
    return RunConfig(
        input_path=args.input,
        method=args.method,
        spec=spec,
        params=params,
        lbf_params=LbfParams(lambda1=args.lambda1, lambda2=args.lambda2),
        out_path=args.out or f"{stem}_overlay.png",
        metrics_path=args.metrics or f"{stem}_metrics.csv",
        benchmark=args.benchmark,
    )


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not (1.0 <= args.t <= 2.0) and not args.allow_t_out_of_range:
            parser.error(
                f"--t {args.t} is outside [1, 2]; pass --allow-t-out-of-range to override"
            )
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _config_from_args(args)
        image = load_image(config.input_path)
        height, width = image.shape
        if config.spec is None:
            config.spec = Circle(
                cx=(width - 1) / 2.0, cy=(height - 1) / 2.0, r=min(width, height) / 4.0
            )

        if config.benchmark:
            report = benchmark(image, config.spec, config.params, config.lbf_params)
            print(format_benchmark(report))
            return 0

        if config.method == "lbf":
            result = lbf_run(image, config.spec, config.params, config.lbf_params)
        else:
            result = run(image, config.spec, config.params)

        initial_mask = region_mask(config.spec, width, height)
        save_overlay(image, initial_mask, result.mask, config.out_path)
        write_metrics(result.metrics, config.metrics_path)
        print(
            f"{config.method}: {result.iterations} iterations, "
            f"{result.convolutions} convolutions, {result.wall_seconds:.3f}s; "
            f"overlay -> {config.out_path}, metrics -> {config.metrics_path}"
        )
        return 0
    except (FormatError, NumericalBlowupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
