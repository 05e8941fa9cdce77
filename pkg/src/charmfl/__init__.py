"""Spectrum-based fault localization engine.

Turns per-test coverage spectra and test outcomes into ranked lists of
suspicious program elements (classes, methods, statements), with four
suspiciousness metrics, Min/Max/Average tie handling, hierarchical
"zooming", report renderers, and a top-N evaluation harness.
"""

from .errors import (
    DanglingReferenceError,
    DimensionMismatchError,
    EmptyInputError,
    MergeConflictError,
    MissingGranularityError,
    SchemaError,
    SpectraError,
    SpectraWarning,
    UnknownGranularityError,
    UnknownMetricError,
    UnresolvedTruthError,
)
from .evaluate import DEFAULT_TOP_N, EvalVerdict, GroundTruth, evaluate
from .html import render_html
from .ingest import (
    SCHEMA_VERSION,
    SpectraDocument,
    emit_spectra,
    load_spectra,
    merge_runs,
    parse_document,
    parse_spectra,
)
from .metrics import (
    DEFAULT_METRICS,
    DSTAR2,
    OCHIAI,
    TARANTULA,
    WONG2,
    MetricId,
    MetricName,
    Score,
    dstar,
    ochiai,
    parse_metric,
    round_significant,
    score,
    score_all,
    tarantula,
    wong2,
)
from .model import (
    CoverageMatrix,
    Kind,
    Outcome,
    ProgramElement,
    SpectraSet,
    SpectrumCounts,
    TestCase,
    compute_counts,
    rollup_coverage,
)
from .ranking import (
    RankedList,
    RankNode,
    ScoredElement,
    TieStrategy,
    assign_ranks,
    build_hierarchical,
    group_positions,
    rank_spectra,
    top_n,
)
from .report import render_json, render_table

__version__ = "0.1.0"

__all__ = [
    "CoverageMatrix",
    "DEFAULT_METRICS",
    "DEFAULT_TOP_N",
    "DSTAR2",
    "DanglingReferenceError",
    "DimensionMismatchError",
    "EmptyInputError",
    "EvalVerdict",
    "GroundTruth",
    "Kind",
    "MergeConflictError",
    "MetricId",
    "MetricName",
    "MissingGranularityError",
    "OCHIAI",
    "Outcome",
    "ProgramElement",
    "RankNode",
    "RankedList",
    "SCHEMA_VERSION",
    "SchemaError",
    "Score",
    "ScoredElement",
    "SpectraDocument",
    "SpectraError",
    "SpectraSet",
    "SpectraWarning",
    "SpectrumCounts",
    "TARANTULA",
    "TestCase",
    "TieStrategy",
    "UnknownGranularityError",
    "UnknownMetricError",
    "UnresolvedTruthError",
    "WONG2",
    "assign_ranks",
    "build_hierarchical",
    "compute_counts",
    "dstar",
    "emit_spectra",
    "evaluate",
    "group_positions",
    "load_spectra",
    "merge_runs",
    "ochiai",
    "parse_document",
    "parse_metric",
    "parse_spectra",
    "rank_spectra",
    "render_html",
    "render_json",
    "render_table",
    "rollup_coverage",
    "round_significant",
    "score",
    "score_all",
    "tarantula",
    "top_n",
    "wong2",
]
