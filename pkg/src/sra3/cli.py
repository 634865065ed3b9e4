"""Command-line interface.

Subcommands::

    sra3 run        execute seeded optimization runs and write records
    sra3 summarize  aggregate a results directory into tables and verdicts
    sra3 bias       epsilon-indicator bias profile over a synthetic front
    sra3 front      export a sampled reference front as CSV

Exit codes: 0 success, 2 configuration/usage error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .analysis import FRONT_SHAPES
from .core import RandomSource
from .experiment import (
    ConfigError,
    ExperimentConfig,
    bias_study,
    default_archive_size,
    format_summary_table,
    load_records,
    run_experiment,
    summarize_records,
    write_bias_csv,
    write_front_csv,
    write_summary,
)
from .metrics import MetricConfig
from .problems import available_problems, get_problem, sample_reference_front

VARIANT_CHOICES = ("none", "eps", "sde", "both")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress details")


def _cmd_run(args: argparse.Namespace) -> int:
    capacity = args.archive_size
    if capacity is None:
        capacity = default_archive_size(args.objectives)
        if capacity is None:
            raise ConfigError(
                f"no default archive size for m={args.objectives}; pass --archive-size"
            )
    metric_config = MetricConfig(
        hv_mc_samples=args.mc_samples,
        igd_reference_size=args.igd_points,
    )
    cfg = ExperimentConfig(
        problems=((args.problem, args.objectives),),
        variants=tuple(args.variant),
        runs=args.runs,
        base_seed=args.seed,
        archive_sizes={args.objectives: capacity},
        max_evaluations=args.max_evals,
        out_dir=Path(args.out),
        jobs=args.jobs,
        metric_config=metric_config,
    )
    paths = run_experiment(cfg)
    for path in paths:
        print(path)
    print(f"wrote {len(paths)} run records to {cfg.out_dir}", file=sys.stderr)
    return 0


def _cmd_summarize(args: argparse.Namespace) -> int:
    records = load_records(args.results)
    if not records:
        raise ConfigError(f"no run records found in {args.results}")
    cells, verdicts = summarize_records(records, alpha=args.alpha)
    out_dir = Path(args.out) if args.out else Path(args.results)
    summary_path, verdict_path = write_summary(cells, verdicts, out_dir)
    print(format_summary_table(cells))
    if verdicts:
        print("\npairwise verdicts (variant_a vs variant_b; '+' = a better):")
        for v in verdicts:
            print(
                f"  {v['problem']} m={v['m']} {v['metric']:<3} "
                f"{v['variant_a']:>4} vs {v['variant_b']:<4} {v['mark']}  (p={v['p_value']:.4g})"
            )
    print(f"\nwrote {summary_path} and {verdict_path}", file=sys.stderr)
    return 0


def _cmd_bias(args: argparse.Namespace) -> int:
    sample, profile = bias_study(
        shape=args.shape,
        scales=(args.scales[0], args.scales[1]),
        n=args.points,
        normalized=args.normalized,
        seed=args.seed,
    )
    write_bias_csv(args.out, sample, profile)
    peak = int(profile.argmax())
    f1, f2 = sample.objectives[peak]
    mode = "normalized" if args.normalized else "raw"
    print(
        f"{args.shape} front, {mode} objectives: profile peaks at "
        f"t={sample.t[peak]:.4f} (f1={f1:.4f}, f2={f2:.4f})"
    )
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _cmd_front(args: argparse.Namespace) -> int:
    spec = get_problem(args.problem, args.objectives)
    F = sample_reference_front(spec, args.count, RandomSource(args.seed))
    write_front_csv(args.out, F, header_comment=f"{spec.name},{spec.m},{len(F)}")
    print(f"wrote {len(F)} front points to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sra3",
        description="Two-archive indicator-based many-objective optimization toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute seeded optimization runs")
    p_run.add_argument("--problem", required=True, help=f"one of: {', '.join(available_problems())}")
    p_run.add_argument("--objectives", "-m", type=int, required=True, help="objective count (>= 2)")
    p_run.add_argument(
        "--variant",
        nargs="+",
        choices=VARIANT_CHOICES,
        default=["none"],
        help="normalization variant(s) to run",
    )
    p_run.add_argument("--archive-size", type=int, default=None, help="archive capacity N (default: protocol size for m)")
    p_run.add_argument("--max-evals", type=int, default=90_000, help="evaluation budget per run")
    p_run.add_argument("--runs", type=int, default=20, help="repetitions per variant")
    p_run.add_argument("--seed", type=int, default=1, help="base seed; run i uses seed + i")
    p_run.add_argument("--out", default="results", help="output directory")
    p_run.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p_run.add_argument("--mc-samples", type=int, default=1_000_000, help="Monte Carlo samples for hypervolume above 3 objectives")
    p_run.add_argument("--igd-points", type=int, default=10_000, help="reference front size for IGD")
    _add_common(p_run)
    p_run.set_defaults(func=_cmd_run)

    p_sum = sub.add_parser("summarize", help="aggregate run records into tables")
    p_sum.add_argument("--results", required=True, help="directory of run records")
    p_sum.add_argument("--out", default=None, help="directory for summary CSVs (default: results dir)")
    p_sum.add_argument("--alpha", type=float, default=0.05, help="significance level for verdicts")
    _add_common(p_sum)
    p_sum.set_defaults(func=_cmd_summarize)

    p_bias = sub.add_parser("bias", help="mean-epsilon bias profile over a synthetic front")
    p_bias.add_argument("--shape", choices=FRONT_SHAPES, required=True)
    p_bias.add_argument("--scales", type=float, nargs=2, default=[1.0, 1.0], metavar=("S1", "S2"), help="objective ranges")
    p_bias.add_argument("--points", type=int, default=1000)
    p_bias.add_argument("--normalized", action="store_true", help="min-max scale the front before profiling")
    p_bias.add_argument("--seed", type=int, default=1)
    p_bias.add_argument("--out", required=True, help="output CSV path")
    _add_common(p_bias)
    p_bias.set_defaults(func=_cmd_bias)

    p_front = sub.add_parser("front", help="export a sampled reference front")
    p_front.add_argument("--problem", required=True)
    p_front.add_argument("--objectives", "-m", type=int, required=True)
    p_front.add_argument("--count", type=int, default=10_000)
    p_front.add_argument("--seed", type=int, default=8_151_623, help="front sampling seed")
    p_front.add_argument("--out", required=True, help="output CSV path")
    _add_common(p_front)
    p_front.set_defaults(func=_cmd_front)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return int(args.func(args) or 0)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - boundary: report and signal failure
        print(f"runtime failure: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
