"""Localization quality against known fault locations.

Given ground truth (statement locations or ids), reports the faulty
element's rank under every tie strategy and whether it lands in the top N of
the statement-level ranking. A top-N check succeeds when the element's best
(Min) rank is within N, matching the tie-inclusive boundary rule used by
`top_n`, so verdicts never depend on arbitrary order inside a tie group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UnresolvedTruthError
from .metrics import MetricId, score_all
from .model import Kind, ProgramElement, SpectraSet
from .ranking import group_positions

DEFAULT_TOP_N = (1, 3, 5, 10)


@dataclass(frozen=True)
class GroundTruth:
    """Known faulty statements, as (file, line) pairs and/or element ids."""

    locations: tuple[tuple[str, int], ...] = ()
    element_ids: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.locations and not self.element_ids:
            raise UnresolvedTruthError("ground truth is empty")

    @classmethod
    def parse(cls, text: str) -> "GroundTruth":
        """Parse "file:line[,file:line...]"; entries without a colon are ids."""
        locations: list[tuple[str, int]] = []
        ids: list[str] = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            file, sep, line = part.rpartition(":")
            if sep and line.isdigit():
                locations.append((file, int(line)))
            else:
                ids.append(part)
        return cls(tuple(locations), tuple(ids))

    def resolve(self, spectra: SpectraSet) -> tuple[ProgramElement, ...]:
        """Map every entry to exactly one statement element."""
        statements = spectra.elements_of_kind(Kind.STATEMENT)
        resolved: list[ProgramElement] = []
        for file, line in self.locations:
            matches = [s for s in statements if s.file == file and s.line == line]
            if not matches:
                raise UnresolvedTruthError(f"no statement at {file}:{line}")
            if len(matches) > 1:
                raise UnresolvedTruthError(
                    f"{file}:{line} is ambiguous ({len(matches)} statements)"
                )
            resolved.append(matches[0])
        for element_id in self.element_ids:
            element = spectra.element_by_id.get(element_id)
            if element is None or element.kind is not Kind.STATEMENT:
                raise UnresolvedTruthError(f"no statement with id {element_id!r}")
            resolved.append(element)
        return tuple(resolved)


@dataclass(frozen=True)
class EvalVerdict:
    """Where the (best) faulty element landed under one metric."""

    metric: MetricId
    min_rank: float
    avg_rank: float
    max_rank: float
    hits: dict[int, bool]
    list_length: int


def evaluate(
    spectra: SpectraSet,
    truth: GroundTruth,
    metrics: Iterable[MetricId],
    n_values: Sequence[int] = DEFAULT_TOP_N,
) -> list[EvalVerdict]:
    """Rank the ground truth at statement granularity under each metric.

    With several faulty statements the best-ranked one decides both the
    reported ranks and the top-N hits. hit(N) is monotone in N.
    """
    metrics = tuple(metrics)
    faulty = truth.resolve(spectra)
    counts = spectra.counts(Kind.STATEMENT)
    scored = score_all(counts, metrics)

    verdicts: list[EvalVerdict] = []
    for metric in metrics:
        scores = {eid: per_metric[metric] for eid, per_metric in scored.items()}
        spans = group_positions(scores)
        best = min((spans[element.id] for element in faulty), key=lambda span: span[0])
        start, end = best
        verdicts.append(
            EvalVerdict(
                metric=metric,
                min_rank=float(start),
                avg_rank=(start + end) / 2,
                max_rank=float(end),
                hits={n: start <= n for n in n_values},
                list_length=len(scores),
            )
        )
    return verdicts
