"""Command-line interface.

Two subcommands share one binary: `rank` renders suspiciousness reports
(table, JSON, or HTML) and `eval` measures localization quality against
known fault locations. Exit codes: 0 success, 1 input validation failure,
2 usage error. Set CHARM_NO_COLOR to disable terminal color.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import SpectraError, UnknownMetricError
from .evaluate import DEFAULT_TOP_N, EvalVerdict, GroundTruth, evaluate
from .html import render_html
from .ingest import load_spectra
from .metrics import DEFAULT_METRICS, MetricId, parse_metric
from .model import Kind
from .ranking import TieStrategy, rank_spectra, top_n
from .report import format_rank, render_json, render_table, use_color


@dataclass
class RunConfig:
    """Everything a `rank` run needs, resolved from the command line."""

    spectra_path: str
    metrics: tuple[MetricId, ...] = DEFAULT_METRICS
    granularity: Kind = Kind.STATEMENT
    tie: TieStrategy = TieStrategy.MIN
    top_n: int | None = None
    format: str = "table"
    output_path: str | None = None
    source_root: str | None = None

    def __post_init__(self) -> None:
        if not self.metrics:
            raise ValueError("at least one metric is required")
        if self.top_n is not None and self.top_n < 1:
            raise ValueError("top_n must be >= 1")


def _metric_arg(text: str) -> MetricId:
    try:
        return parse_metric(text)
    except UnknownMetricError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _top_list(text: str) -> tuple[int, ...]:
    return tuple(_positive_int(part) for part in text.split(",") if part.strip())


def _truth_arg(text: str) -> GroundTruth:
    try:
        return GroundTruth.parse(text)
    except SpectraError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charmfl",
        description="Spectrum-based fault localization reports and evaluation.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    rank = commands.add_parser("rank", help="rank elements by suspiciousness")
    rank.add_argument("--spectra", required=True, help="spectra interchange JSON file")
    rank.add_argument(
        "--metric",
        action="append",
        type=_metric_arg,
        metavar="NAME",
        help="tarantula, ochiai, dstar[N], wong2; repeatable (default: all four)",
    )
    rank.add_argument(
        "--granularity",
        choices=[k.value for k in Kind],
        default=Kind.STATEMENT.value,
        metavar="LEVEL",
        help="statement, method, or class (default: statement)",
    )
    rank.add_argument(
        "--tie",
        choices=[t.value for t in TieStrategy],
        default=TieStrategy.MIN.value,
        metavar="MODE",
        help="min, max, or average (default: min)",
    )
    rank.add_argument("--top", type=_positive_int, metavar="N", help="keep the top N entries")
    rank.add_argument(
        "--format", choices=("table", "json", "html"), default="table"
    )
    rank.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    rank.add_argument(
        "--source-root", metavar="DIR", help="embed source listings from this directory (html)"
    )

    check = commands.add_parser("eval", help="rank known faulty lines and check top-N")
    check.add_argument("--spectra", required=True, help="spectra interchange JSON file")
    check.add_argument(
        "--truth",
        required=True,
        type=_truth_arg,
        metavar="LOC",
        help='faulty statements as "file:line[,file:line...]" or element ids',
    )
    check.add_argument(
        "--metric",
        action="append",
        type=_metric_arg,
        metavar="NAME",
        help="metrics to evaluate (default: all four)",
    )
    check.add_argument(
        "--top",
        type=_top_list,
        default=DEFAULT_TOP_N,
        metavar="N,N,...",
        help="top-N thresholds to check (default: 1,3,5,10)",
    )
    check.add_argument("--format", choices=("table", "json"), default="table")
    check.add_argument("--out", metavar="PATH", help="write the verdicts here instead of stdout")
    return parser


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8", newline="\n")


def _load(path: str):
    try:
        return load_spectra(path)
    except OSError as exc:
        raise SpectraError(f"cannot read spectra file {path!r}: {exc}") from exc


def _run_rank(args: argparse.Namespace) -> int:
    config = RunConfig(
        spectra_path=args.spectra,
        metrics=tuple(args.metric) if args.metric else DEFAULT_METRICS,
        granularity=Kind(args.granularity),
        tie=TieStrategy(args.tie),
        top_n=args.top,
        format=args.format,
        output_path=args.out,
        source_root=args.source_root,
    )
    spectra = _load(config.spectra_path)
    lists = [
        rank_spectra(spectra, metric, config.granularity, config.tie)
        for metric in config.metrics
    ]
    if config.top_n is not None:
        lists = [top_n(ranked, config.top_n) for ranked in lists]

    if config.format == "json":
        text = render_json(lists, spectra)
    elif config.format == "html":
        text = render_html(lists, spectra, config.source_root)
    else:
        text = render_table(
            lists,
            spectra,
            color=config.output_path is None and use_color(sys.stdout),
            include_hierarchy=config.top_n is None,
        )
    _write(text, config.output_path)
    return 0


def _eval_table(verdicts: list[EvalVerdict], n_values: tuple[int, ...]) -> str:
    header = ["Metric", "MinRank", "AvgRank", "MaxRank", "Length"]
    header += [f"Top-{n}" for n in n_values]
    rows = [header]
    for verdict in verdicts:
        row = [
            verdict.metric.label,
            str(format_rank(verdict.min_rank)),
            str(format_rank(verdict.avg_rank)),
            str(format_rank(verdict.max_rank)),
            str(verdict.list_length),
        ]
        row += ["hit" if verdict.hits[n] else "miss" for n in n_values]
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(f"{cell:<{widths[i]}}" for i, cell in enumerate(row)) for row in rows]
    return "\n".join(lines) + "\n"


def _eval_json(verdicts: list[EvalVerdict], n_values: tuple[int, ...]) -> str:
    payload = [
        {
            "metric": verdict.metric.label,
            "rank": {
                "min": format_rank(verdict.min_rank),
                "average": format_rank(verdict.avg_rank),
                "max": format_rank(verdict.max_rank),
            },
            "hits": {str(n): verdict.hits[n] for n in n_values},
            "list_length": verdict.list_length,
        }
        for verdict in verdicts
    ]
    return json.dumps(payload, indent=2) + "\n"


def _run_eval(args: argparse.Namespace) -> int:
    spectra = _load(args.spectra)
    metrics = tuple(args.metric) if args.metric else DEFAULT_METRICS
    n_values = tuple(args.top)
    verdicts = evaluate(spectra, args.truth, metrics, n_values)
    if args.format == "json":
        text = _eval_json(verdicts, n_values)
    else:
        text = _eval_table(verdicts, n_values)
    _write(text, args.out)
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "rank":
            return _run_rank(args)
        return _run_eval(args)
    except (SpectraError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
