# Copyright (c) 2025 Tsutomu FUNADA
# This software is licensed for:
#   - Non-commercial use under the MIT License (see LICENSE-NC.txt)
#   - Commercial use requires a separate commercial license (contact author)
# You may not use this software for commercial purposes under the MIT License.

import argparse
import logging
import sys
from typing import List, Optional

from config import settings
from config.types import CHECK_SECTIONS, EXIT_CODES, ReportFormat
from models.errors import HcatError
from models.types import RunConfig
from services.init import command_service_map

COMMANDS = ["tau", "tau-h", "ass", "knit", "stable-quiver", "periodicity", "check-paper"]


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcat-ar", description="Auslander-Reiten theory in the morphism category H(Λ)."
    )
    parser.add_argument("subcommand", choices=COMMANDS)
    parser.add_argument("--algebra", required=True, help="Bundled algebra name or path to a JSON spec.")
    parser.add_argument("--object", help="Object path or inline expression, e.g. '0->S' or 'P->S'.")
    parser.add_argument("--module", help="Module expression for `tau`, e.g. 'S' or 'U2'.")
    parser.add_argument("--power", type=int, default=1, help="Signed power of τ / τ_H (default: 1).")
    parser.add_argument("--max-dim", type=_positive, default=settings.MAX_DIM)
    parser.add_argument("--period-bound", type=_positive, default=settings.PERIOD_BOUND)
    parser.add_argument("--dot", help="Write the quiver as DOT to this path.")
    parser.add_argument("--format", choices=[f.value for f in ReportFormat], default=ReportFormat.TEXT.value)
    parser.add_argument("--seed", type=int, default=settings.SEED)
    parser.add_argument("--output", help="Write the report to this path.")
    parser.add_argument("--sections", help=f"Comma separated subset of {','.join(CHECK_SECTIONS)}.")
    parser.add_argument("--verbose", action="store_true")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    return {
        "subcommand": args.subcommand,
        "algebra": args.algebra,
        "object": args.object,
        "module": args.module,
        "max_dim": args.max_dim,
        "period_bound": args.period_bound,
        "dot": args.dot,
        "format": args.format,
        "seed": args.seed,
        "output": args.output,
        "sections": [s.strip() for s in args.sections.split(",")] if args.sections else None,
        "power": args.power,
        "verbose": args.verbose,
    }


def run(config: RunConfig) -> int:
    """Runs one subcommand and returns its exit status."""
    service = command_service_map[config["subcommand"]]
    try:
        report = service.run(config)
    except HcatError as e:
        logging.error(f"[run] {config['subcommand']}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES[e.exit_key]
    sys.stdout.write(service.emit(report, config))
    return EXIT_CODES["ok"] if report["status"] == "success" else EXIT_CODES["check_failed"]


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.LOG_LEVEL)
    return run(to_config(args))


if __name__ == "__main__":
    sys.exit(main())
