"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import catalog
from .oracle import DEFAULT_LIMITS, UNLIMITED, ResourceCapExceeded

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="embedcount",
        description="Exact counts of embedded dipoles, bouquets and directed bouquets.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("value", help="print one value")
    p.add_argument("family")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--k", type=_positive, help="number of colors (colored families only)")

    p = sub.add_parser("table", help="print a sequence for n = 0..N")
    p.add_argument("family")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--format", choices=catalog.FORMATS, default="plain")
    p.add_argument("--start", type=_nonneg, default=0, help="omit rows with n below this index")

    p = sub.add_parser("verify", help="check closed forms against brute-force orbit counts")
    p.add_argument("--families", help="comma-separated tokens (default: all base families)")
    p.add_argument("--max-n", type=_nonneg)
    p.add_argument("--max-k", type=_positive)
    p.add_argument("--unsafe-override-caps", action="store_true",
                   help="allow enumerations beyond the default size caps")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("list-families", help="list every sequence token")
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_value(args) -> int:
    print(catalog.evaluate(args.family, args.n, args.k))
    return EXIT_OK


def _cmd_table(args) -> int:
    record = catalog.table(args.family, args.n_max, args.k)
    sys.stdout.write(catalog.format_record(record, args.format, args.start))
    return EXIT_OK


def _cmd_verify(args) -> int:
    families = [t for t in args.families.split(",") if t.strip()] if args.families else None
    limits = UNLIMITED if args.unsafe_override_caps else DEFAULT_LIMITS
    report = catalog.verify(families, args.max_n, args.max_k, limits, args.inject_fault)
    for cell in report.mismatches:
        print(cell.describe())
    print(f"{len(report.cells)} checks, {len(report.mismatches)} mismatches")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _cmd_list(args) -> int:
    tokens = catalog.canonical_tokens()
    if args.json:
        rows = [
            {
                "token": t,
                "kind": catalog.REGISTRY[t].family.family,
                "colored": catalog.REGISTRY[t].family.colored,
                "oeis": catalog.REGISTRY[t].oeis,
            }
            for t in tokens
        ]
        print(json.dumps({"families": rows, "aliases": catalog.ALIASES}, indent=2))
        return EXIT_OK
    for t in tokens:
        oeis = catalog.REGISTRY[t].oeis
        print(f"{t}\t{oeis}" if oeis else t)
    for alias, target in catalog.ALIASES.items():
        print(f"{alias}\t= {target}")
    return EXIT_OK


_COMMANDS = {"value": _cmd_value, "table": _cmd_table, "verify": _cmd_verify, "list-families": _cmd_list}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except ResourceCapExceeded as exc:
        print(f"embedcount: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"embedcount: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
