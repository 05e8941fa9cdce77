"""Rank assignment with tie handling, hierarchical lists, and top-N cuts.

Elements sharing a score (after rounding to 12 significant digits) form a
tie group occupying sorted positions p..q; the tie strategy assigns p (Min),
q (Max), or (p+q)/2 (Average) to every member. Display order inside a group
is (file, line, id) ascending so reports are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Mapping, Sequence

from .errors import MissingGranularityError
from .metrics import MetricId, Score, round_significant, score_all
from .model import Kind, ProgramElement, SpectraSet

SortKey = Callable[[str], tuple]


class TieStrategy(str, Enum):
    MIN = "min"
    MAX = "max"
    AVERAGE = "average"


@dataclass(frozen=True)
class ScoredElement:
    element_id: str
    score: Score
    rank: float


@dataclass(frozen=True)
class RankNode:
    """One element in the hierarchical ranking tree."""

    element: ProgramElement
    entry: ScoredElement
    children: tuple["RankNode", ...] = ()

    def walk(self) -> Iterator["RankNode"]:
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class RankedList:
    """Ranked elements for one metric at one granularity.

    `entries` is the flat list, sorted by descending score. `hierarchy`
    (when parent links exist) nests classes over methods over statements,
    each level internally sorted by its own scores, so a depth-first walk
    visits the statements of a higher-ranked method before any statement of
    a lower-ranked one.
    """

    metric: MetricId
    granularity: Kind
    tie: TieStrategy
    entries: tuple[ScoredElement, ...]
    hierarchy: tuple[RankNode, ...] | None = None

    def iter_hierarchy(self) -> Iterator[RankNode]:
        """Depth-first traversal of the hierarchy, highest scores first."""
        for root in self.hierarchy or ():
            yield from root.walk()


def _group_spans(ordered_values: Sequence[float]) -> list[tuple[int, int]]:
    """(start, end) 1-based positions of each tie group, in list order.

    `ordered_values` must already be sorted; equal adjacent values share a
    group. One span is emitted per element (repeated for group members).
    """
    spans: list[tuple[int, int]] = []
    i = 0
    while i < len(ordered_values):
        j = i
        while j + 1 < len(ordered_values) and ordered_values[j + 1] == ordered_values[i]:
            j += 1
        spans.extend([(i + 1, j + 1)] * (j - i + 1))
        i = j + 1
    return spans


def _rank_from_span(span: tuple[int, int], tie: TieStrategy) -> float:
    start, end = span
    if tie is TieStrategy.MIN:
        return float(start)
    if tie is TieStrategy.MAX:
        return float(end)
    return (start + end) / 2


def assign_ranks(
    scores: Mapping[str, Score],
    tie: TieStrategy = TieStrategy.MIN,
    sort_key: SortKey | None = None,
) -> list[ScoredElement]:
    """Order elements by descending score and assign tie-aware ranks.

    `sort_key` fixes the display order inside a tie group (defaults to the
    element id); it never influences the rank values themselves.
    """
    if not scores:
        raise ValueError("cannot rank an empty score map")
    key = sort_key or (lambda element_id: (element_id,))
    rounded = {
        element_id: round_significant(s.value) for element_id, s in scores.items()
    }
    ordered = sorted(scores, key=lambda eid: (-rounded[eid], key(eid)))
    spans = _group_spans([rounded[eid] for eid in ordered])
    return [
        ScoredElement(eid, scores[eid], _rank_from_span(span, tie))
        for eid, span in zip(ordered, spans)
    ]


def group_positions(scores: Mapping[str, Score]) -> dict[str, tuple[int, int]]:
    """Tie-group (start, end) positions per element, 1-based."""
    rounded = {eid: round_significant(s.value) for eid, s in scores.items()}
    ordered = sorted(scores, key=lambda eid: (-rounded[eid], eid))
    spans = _group_spans([rounded[eid] for eid in ordered])
    return dict(zip(ordered, spans))


def _location_key(spectra: SpectraSet) -> SortKey:
    def key(element_id: str) -> tuple:
        element = spectra.element_by_id[element_id]
        return (element.file, element.line, element.id)

    return key


def build_hierarchical(
    scored_by_level: Mapping[Kind, Sequence[ScoredElement]],
    spectra: SpectraSet,
) -> tuple[RankNode, ...]:
    """Nest scored elements into the class > method > statement tree.

    Roots are the classes plus any parentless methods and statements. Every
    granularity present in the spectra must come with scores.
    """
    for kind in spectra.present_kinds:
        if kind not in scored_by_level:
            raise MissingGranularityError(f"no scores supplied for {kind.value} level")

    entry_by_id: dict[str, ScoredElement] = {}
    for entries in scored_by_level.values():
        for entry in entries:
            entry_by_id[entry.element_id] = entry

    children_ids: dict[str, list[str]] = {}
    roots: list[str] = []
    for element in spectra.elements:
        if element.parent_id is None:
            roots.append(element.id)
        else:
            children_ids.setdefault(element.parent_id, []).append(element.id)

    def sort_ids(ids: list[str]) -> list[str]:
        def key(element_id: str) -> tuple:
            element = spectra.element_by_id[element_id]
            value = round_significant(entry_by_id[element_id].score.value)
            return (-value, element.file, element.line, element.id)

        return sorted(ids, key=key)

    def build(element_id: str) -> RankNode:
        children = tuple(build(cid) for cid in sort_ids(children_ids.get(element_id, [])))
        return RankNode(
            element=spectra.element_by_id[element_id],
            entry=entry_by_id[element_id],
            children=children,
        )

    return tuple(build(eid) for eid in sort_ids(roots))


def rank_spectra(
    spectra: SpectraSet,
    metric: MetricId,
    granularity: Kind = Kind.STATEMENT,
    tie: TieStrategy = TieStrategy.MIN,
) -> RankedList:
    """Full pipeline: rollup, score, rank, and (when possible) nest.

    The hierarchy is built whenever the spectra carry more than one
    granularity; the flat entries always reflect the requested one.
    """
    key = _location_key(spectra)
    scored_by_level: dict[Kind, list[ScoredElement]] = {}
    for kind in spectra.present_kinds:
        counts = spectra.counts(kind)
        scores = {eid: per_metric[metric] for eid, per_metric in score_all(counts, [metric]).items()}
        scored_by_level[kind] = assign_ranks(scores, tie, key)

    if granularity not in scored_by_level:
        # Surfaces the canonical UnknownGranularityError message.
        spectra.counts(granularity)
    entries = tuple(scored_by_level[granularity])

    hierarchy: tuple[RankNode, ...] | None = None
    if len(scored_by_level) > 1:
        hierarchy = build_hierarchical(scored_by_level, spectra)
    return RankedList(metric, granularity, tie, entries, hierarchy)


def top_n(ranked: RankedList, n: int) -> RankedList:
    """First n entries, extended through any tie group straddling the cut.

    A tie group whose best (Min) rank is within n is kept in full, so the
    result may exceed n entries; success checks built on it do not depend
    on arbitrary intra-group order.
    """
    if n < 1:
        raise ValueError(f"top-n requires n >= 1, got {n}")
    kept: list[ScoredElement] = []
    values = [round_significant(e.score.value) for e in ranked.entries]
    spans = _group_spans(values)
    for entry, (start, _end) in zip(ranked.entries, spans):
        if start > n:
            break
        kept.append(entry)
    return RankedList(ranked.metric, ranked.granularity, ranked.tie, tuple(kept), ranked.hierarchy)
