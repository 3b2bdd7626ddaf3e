# vrpstw/cli.py

from __future__ import annotations

import argparse
import logging
import signal
import sys
from pathlib import Path
from typing import Any

from vrpstw.errors import ConfigError, GenerationError, InputError, RunError
from vrpstw.harness.campaign import (
    ALGORITHMS,
    build_campaign,
    load_campaign_file,
    load_instances,
    run_campaign,
)
from vrpstw.harness.generation import generate_batch, write_batch
from vrpstw.harness.scoring import load_records, score_records
from vrpstw.instances.generator import GeneratorParams
from vrpstw.instances.spec import desk_suite, standard_suite
from vrpstw.metrics.fronts import format_front, load_front
from vrpstw.metrics.quality import build_reference

EXIT_OK = 0
EXIT_MISSING_INPUT = 1
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_OUTPUT = 4

SUITES = {"standard": standard_suite, "desk": desk_suite}


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _missing(paths: list[Path]) -> list[Path]:
    return [path for path in paths if not path.exists()]


# ---------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------


def cmd_generate(args: argparse.Namespace) -> int:
    labels: list[str] = list(args.spec or [])
    if args.suite:
        labels.extend(SUITES[args.suite]())
    if not labels:
        return _fail("Nothing to generate: pass --spec or --suite", EXIT_CONFIG)

    try:
        params = GeneratorParams(
            plane_size=args.plane_size,
            demand_min=args.demand_min,
            demand_max=args.demand_max,
            unload=args.unload,
            capacity=args.capacity,
            horizon_start=args.horizon_start,
            horizon_end=args.horizon_end,
            cluster_spread=args.cluster_spread,
            clusters=args.clusters,
        )
        instances = generate_batch(labels, params, args.seed)
    except InputError as exc:
        return _fail(f"Invalid instance spec: {exc}", EXIT_CONFIG)
    except GenerationError as exc:
        return _fail(f"Generation failed: {exc}", EXIT_SOLVER)

    try:
        paths = write_batch(instances, args.out)
    except OSError as exc:
        return _fail(f"Failed to write instances: {exc}", EXIT_OUTPUT)

    for path in paths:
        print(path)
    return EXIT_OK


# ---------------------------------------------------------------------
# run
# ---------------------------------------------------------------------


def _campaign_settings(args: argparse.Namespace) -> dict[str, Any]:
    settings: dict[str, Any] = {}
    if args.config is not None:
        settings = load_campaign_file(args.config)
    ga = dict(settings.get("ga") or {})

    overrides = {
        "instances": [str(path) for path in args.instances] or None,
        "algorithms": args.algo,
        "runs": args.runs,
        "base_seed": args.seed,
        "out": args.out,
        "workers": args.workers,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    ga_overrides = {
        "pop_size": args.pop_size,
        "p_mut": args.p_mut,
        "stagnation_limit": args.stagnation,
        "max_iterations": args.max_iterations,
    }
    ga.update({k: v for k, v in ga_overrides.items() if v is not None})
    settings["ga"] = ga
    return settings


def cmd_run(args: argparse.Namespace) -> int:
    if args.config is not None and not args.config.exists():
        return _fail(f"Campaign file not found: {args.config}", EXIT_MISSING_INPUT)

    try:
        campaign = build_campaign(_campaign_settings(args))
    except ConfigError as exc:
        return _fail(f"Invalid campaign: {exc}", EXIT_CONFIG)
    except OSError as exc:
        return _fail(f"Failed to read campaign file: {exc}", EXIT_MISSING_INPUT)

    missing = _missing(list(campaign.instances))
    if missing:
        return _fail(f"Instance path not found: {missing[0]}", EXIT_MISSING_INPUT)

    try:
        instances = load_instances(campaign.instances)
    except InputError as exc:
        return _fail(f"Failed to load instances: {exc}", EXIT_CONFIG)
    except ConfigError as exc:
        return _fail(f"Invalid campaign: {exc}", EXIT_CONFIG)
    except OSError as exc:
        return _fail(f"Failed to read instances: {exc}", EXIT_MISSING_INPUT)

    try:
        records = run_campaign(campaign, instances)
    except OSError as exc:
        return _fail(f"Failed to write run records: {exc}", EXIT_OUTPUT)

    failed = [record for record in records if not record.ok]
    print(
        f"{len(records)} runs written to {campaign.out / 'runs'}"
        + (f", {len(failed)} failed" if failed else "")
    )
    return EXIT_OK


# ---------------------------------------------------------------------
# score
# ---------------------------------------------------------------------


def cmd_score(args: argparse.Namespace) -> int:
    if not args.records.exists():
        return _fail(f"Records directory not found: {args.records}", EXIT_MISSING_INPUT)

    try:
        records = load_records(args.records)
    except InputError as exc:
        return _fail(f"Failed to read run records: {exc}", EXIT_CONFIG)
    except OSError as exc:
        return _fail(f"Failed to read run records: {exc}", EXIT_MISSING_INPUT)
    if not records:
        return _fail(f"No run records below {args.records}", EXIT_CONFIG)

    tables = score_records(records)
    out = args.out or args.records
    try:
        paths = tables.write(out)
    except OSError as exc:
        return _fail(f"Failed to write score tables: {exc}", EXIT_OUTPUT)

    for path in paths:
        print(path)
    return EXIT_OK


# ---------------------------------------------------------------------
# pareto
# ---------------------------------------------------------------------


def cmd_pareto(args: argparse.Namespace) -> int:
    missing = _missing(args.fronts)
    if missing:
        return _fail(f"Front file not found: {missing[0]}", EXIT_MISSING_INPUT)

    try:
        reference = build_reference(load_front(path) for path in args.fronts)
    except InputError as exc:
        return _fail(f"Failed to build front: {exc}", EXIT_CONFIG)
    except OSError as exc:
        return _fail(f"Failed to read front: {exc}", EXIT_MISSING_INPUT)

    text = format_front(reference)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text, encoding="utf-8")
    except OSError as exc:
        return _fail(f"Failed to write front: {exc}", EXIT_OUTPUT)
    return EXIT_OK


# ---------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    defaults = GeneratorParams()
    parser = argparse.ArgumentParser(
        prog="vrpstw.cli",
        description="Multi-objective VRPSTW solvers: generate, run, score, pareto",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging threshold for progress messages on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "generate",
        help="Generate instance files from alpha;beta;gamma;delta specs",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    gen.add_argument(
        "--spec",
        action="append",
        help="Instance classification, e.g. 'C;20;0.70;60' (repeatable)",
    )
    gen.add_argument("--suite", choices=sorted(SUITES), help="Add a predefined suite")
    gen.add_argument("--seed", type=int, default=0, help="Generator seed")
    gen.add_argument("--out", type=Path, default=Path("instances"))
    gen.add_argument("--plane-size", type=float, default=defaults.plane_size)
    gen.add_argument("--demand-min", type=int, default=defaults.demand_min)
    gen.add_argument("--demand-max", type=int, default=defaults.demand_max)
    gen.add_argument("--unload", type=float, default=defaults.unload)
    gen.add_argument("--capacity", type=float, default=defaults.capacity)
    gen.add_argument("--horizon-start", type=float, default=defaults.horizon_start)
    gen.add_argument("--horizon-end", type=float, default=defaults.horizon_end)
    gen.add_argument("--cluster-spread", type=float, default=defaults.cluster_spread)
    gen.add_argument(
        "--clusters",
        type=int,
        default=None,
        help="Cluster count for C instances (default: max(2, beta // 10))",
    )
    gen.set_defaults(handler=cmd_generate)

    run = sub.add_parser(
        "run",
        help="Run a seeded campaign and write one RunRecord per run",
    )
    run.add_argument("instances", nargs="*", type=Path, help="Instance files or dirs")
    run.add_argument("--config", type=Path, help="Campaign YAML file")
    run.add_argument(
        "--algo",
        action="append",
        help=f"Algorithm to run (repeatable): {', '.join(ALGORITHMS)}",
    )
    run.add_argument("--runs", type=int, help="Runs per (instance, algorithm)")
    run.add_argument("--seed", type=int, help="Base seed")
    run.add_argument("--pop-size", type=int, help="GA population size")
    run.add_argument("--p-mut", type=float, help="Mutation probability of UOBX+2EX")
    run.add_argument("--stagnation", type=int, help="GA stagnation limit")
    run.add_argument("--max-iterations", type=int, help="GA iteration cap")
    run.add_argument("--workers", type=int, help="Worker processes")
    run.add_argument("--out", type=Path, help="Output directory")
    run.set_defaults(handler=cmd_run)

    score = sub.add_parser("score", help="Score RunRecords and write CSV tables")
    score.add_argument("records", type=Path, help="Directory holding RunRecords")
    score.add_argument("--out", type=Path, help="Table directory (default: records)")
    score.set_defaults(handler=cmd_score)

    pareto = sub.add_parser(
        "pareto", help="Nondominated union of front files or RunRecord files"
    )
    pareto.add_argument("fronts", nargs="+", type=Path)
    pareto.add_argument("--out", type=Path, help="Write here instead of stdout")
    pareto.set_defaults(handler=cmd_pareto)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        code: int = args.handler(args)
    except RunError as exc:
        return _fail(f"Solver failed: {exc}", EXIT_SOLVER)
    return code


if __name__ == "__main__":
    signal.signal(signal.SIGPIPE, signal.SIG_DFL)  # Ignore broken pipe
    sys.exit(main())
