"""Command-line interface.

Subcommands:

- ``audit list``: show every registered identity with its expected verdict.
- ``audit run``: evaluate the registry over rational grids and emit a report.
- ``audit seq``: print exact terms of a named sequence family.

Exit codes: 0 when every verdict matches its pinned expectation, 1 when a
verdict deviates, 2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from .audit.config import AuditConfig, ConfigError, load_config
from .audit.registry import build_registry
from .audit.runner import render_csv, render_json, render_markdown, run_audit
from .classic_numbers import FamilyTag, classic_sequence
from .y6_engine import bnk, franel, moment, y6

EXIT_OK = 0
EXIT_VERDICT_MISMATCH = 1
EXIT_USAGE = 2


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"not a rational number: {text!r}") from exc


def _parse_params(items: list[str]) -> dict[str, Fraction]:
    params: dict[str, Fraction] = {}
    for item in items:
        for piece in item.split(","):
            if not piece:
                continue
            if "=" not in piece:
                raise ConfigError(f"expected key=value, got {piece!r}")
            key, _, value = piece.partition("=")
            params[key.strip()] = _parse_fraction(value.strip())
    return params


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ConfigError(f"expected a..b range, got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError as exc:
        raise ConfigError(f"range bounds must be integers: {text!r}") from exc
    if b < a:
        raise ConfigError(f"empty range: {text!r}")
    return range(a, b + 1)


def _int_param(params: dict, key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise ConfigError(f"missing required parameter {key!r}")
        return default
    value = params[key]
    if value.denominator != 1:
        raise ConfigError(f"parameter {key!r} must be an integer")
    return int(value)


SequenceFn = Callable[[int, dict], Fraction]


def _seq_families() -> dict[str, SequenceFn]:
    return {
        "bnk": lambda n, ps: bnk(_int_param(ps, "d"), n),
        "franel": lambda n, ps: franel(
            _int_param(ps, "p", 3),
            _int_param(ps, "m", 0),
            n,
            ps.get("lam", Fraction(1)),
        ),
        "y6": lambda n, ps: y6(
            _int_param(ps, "m", 0),
            n,
            ps.get("lam", Fraction(1)),
            _int_param(ps, "p", 2),
        ),
        "moment": lambda n, ps: moment(
            _int_param(ps, "m", 0), _int_param(ps, "p", 2), n
        ),
        "catalan": lambda n, ps: classic_sequence(FamilyTag.CATALAN, n),
        "daehee": lambda n, ps: classic_sequence(FamilyTag.DAEHEE, n),
        "changhee": lambda n, ps: classic_sequence(FamilyTag.CHANGHEE, n),
    }


def _cmd_list(args: argparse.Namespace) -> int:
    for entry in build_registry():
        print(f"{entry.id:24s} {entry.expected.value:22s} {entry.paper_ref}")
    return EXIT_OK


def _cmd_run(args: argparse.Namespace) -> int:
    config = AuditConfig()
    if args.config:
        config = load_config(args.config)
    report = run_audit(config, pattern=args.filter, threads=args.threads)
    renderers = {
        "json": render_json,
        "md": render_markdown,
        "csv": render_csv,
    }
    text = renderers[args.format](report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    if not report.results:
        print("no entries matched the filter", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if report.all_expected else EXIT_VERDICT_MISMATCH


def _cmd_seq(args: argparse.Namespace) -> int:
    family = args.family or args.family_opt
    if family is None:
        raise ConfigError("a sequence family is required")
    fn = _seq_families()[family]
    params = _parse_params(args.params)
    rng = _parse_range(args.range)
    rows = [(n, fn(n, params)) for n in rng]
    if args.format == "json":
        doc = {
            "family": family,
            "params": {k: str(v) for k, v in params.items()},
            "values": [{"n": n, "value": str(v)} for n, v in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        lines = ["n,value"] + [f"{n},{v}" for n, v in rows]
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="audit",
        description="exact identity audits for binomial-power sums",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered identities").set_defaults(
        fn=_cmd_list
    )

    run = sub.add_parser("run", help="run the identity audit")
    run.add_argument("--filter", default="*", help="glob filter on entry ids")
    run.add_argument("--config", default=None, help="grid configuration file")
    run.add_argument(
        "--format", choices=("json", "md", "csv"), default="json"
    )
    run.add_argument("--out", default=None, help="write the report to a file")
    run.add_argument("--threads", type=int, default=1)
    run.set_defaults(fn=_cmd_run)

    seq = sub.add_parser("seq", help="print terms of a sequence family")
    seq.add_argument(
        "family", nargs="?", default=None, choices=sorted(_seq_families())
    )
    seq.add_argument(
        "--family",
        dest="family_opt",
        default=None,
        choices=sorted(_seq_families()),
        help="alternative to the positional family argument",
    )
    seq.add_argument("--range", default="0..10", help="index range a..b")
    seq.add_argument(
        "--params",
        action="append",
        default=[],
        help="comma-separated key=value pairs; values may be fractions",
    )
    seq.add_argument("--format", choices=("csv", "json"), default="csv")
    seq.add_argument("--out", default=None, help="write output to a file")
    seq.set_defaults(fn=_cmd_seq)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
