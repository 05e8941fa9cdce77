"""Console entry point: charmfl-collect.

Runs a project's pytest suite once, records per-test statement coverage and
outcomes, and writes a spectra interchange document for the ranking engine.
Exit codes: 0 written, 1 collection failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .collect import CollectorConfig, collect
from .errors import CollectorError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charmfl-collect",
        description="Collect per-test coverage spectra from a Python project.",
    )
    parser.add_argument("--root", required=True, help="project root directory")
    parser.add_argument(
        "--tests",
        default="",
        metavar="EXPR",
        help="extra pytest arguments, e.g. a test directory or '-k pattern'",
    )
    parser.add_argument("--out", required=True, help="output spectra JSON path")
    parser.add_argument(
        "--include",
        action="append",
        default=[],
        metavar="PATTERN",
        help="only measure files matching this root-relative pattern (repeatable)",
    )
    parser.add_argument(
        "--omit",
        action="append",
        default=[],
        metavar="PATTERN",
        help="skip files matching this root-relative pattern (repeatable)",
    )
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = None
    try:
        config = CollectorConfig(
            project_root=args.root,
            output_path=args.out,
            test_selector=args.tests,
            include=tuple(args.include),
            omit=tuple(args.omit),
        )
        document = collect(config)
    except (CollectorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    outcomes = [t["outcome"] for t in document["tests"]]
    statements = sum(1 for e in document["elements"] if e["kind"] == "statement")
    print(
        f"wrote {config.output_path}: {len(outcomes)} tests "
        f"({outcomes.count('failed')} failed, {outcomes.count('passed')} passed), "
        f"{statements} statements"
    )
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
