"""Command-line front end.

Subcommands:
  sweep   evaluate a parameter grid from a config file and write CSV
  verify  run the oracle cross-check suite and report pass/fail
  point   report a single cycle as key = value lines

Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .config import ConfigError, parse_config
from .sweeps import run_point, run_sweep
from .verification import DEFAULT_SEED, run_verify

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; route them through the
    # validation-error path instead
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="ottoqft", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="evaluate a parameter grid and write CSV")
    sweep.add_argument("--config", required=True, help="path to a key=value config file")
    sweep.add_argument("--set", dest="sets", action="append", default=[],
                       metavar="KEY=VALUE", help="override one config key")
    sweep.add_argument("--jobs", type=int, default=None,
                       help="worker count (default: available parallelism)")

    verify = sub.add_parser("verify", help="run the oracle cross-check suite")
    verify.add_argument("--set", dest="sets", action="append", default=[],
                        metavar="KEY=VALUE",
                        help="override seed/cases/dim or a tol_<check> threshold")

    point = sub.add_parser("point", help="report a single cycle to stdout")
    point.add_argument("--set", dest="sets", action="append", default=[],
                       metavar="KEY=VALUE", help="set one parameter (repeatable)")
    return parser


def _cmd_sweep(args: argparse.Namespace) -> int:
    text = _read(args.config)
    spec = parse_config(text, args.sets)
    if spec.mode not in ("curve-tau2", "grid-couplings"):
        raise ConfigError(
            f"sweep requires mode curve-tau2 or grid-couplings, got {spec.mode!r}"
        )
    csv_doc = run_sweep(spec, jobs=args.jobs)
    _write(spec.output_path, csv_doc)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = parse_config("mode = verify", args.sets)
    status, report = run_verify(
        spec.tolerance_overrides or None,
        seed=spec.seed if spec.seed is not None else DEFAULT_SEED,
        cases=spec.cases if spec.cases is not None else 50,
        dim=spec.dim if spec.dim is not None else 60,
    )
    print(report)
    return status


def _cmd_point(args: argparse.Namespace) -> int:
    spec = parse_config("mode = single-point", args.sets)
    sys.stdout.write(run_point(spec))
    return 0


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_point(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
