"""Plain-text and JSON renderers for ranked lists.

Output is deterministic: scores are printed with six decimal places
("inf" for DStar's infinity), ranks drop a trailing ".0", and tie order is
fixed upstream by (file, line). The same helpers feed the HTML report.
"""

from __future__ import annotations

import json
import math
import os
from typing import Iterable, Sequence

from .model import Kind, SpectraSet
from .ranking import RankedList, RankNode

_KIND_DEPTH = {Kind.CLASS: 0, Kind.METHOD: 1, Kind.STATEMENT: 2}

# 10 discrete tint levels; 0 means "no tint".
TINT_LEVELS = 10


def format_score(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return f"{value:.6f}"


def format_rank(rank: float) -> int | float:
    return int(rank) if rank == int(rank) else rank


def tint_level(value: float, lo: float, hi: float) -> int:
    """Discrete 0..9 tint for a score, given the finite min/max of its list.

    Monotone in `value`; 0 and negative scores carry no tint, +infinity is
    pinned to the darkest level.
    """
    if math.isinf(value) and value > 0:
        return TINT_LEVELS - 1
    if value <= 0 or hi <= lo:
        return 0
    norm = (value - lo) / (hi - lo)
    return max(0, min(TINT_LEVELS - 1, int(norm * TINT_LEVELS)))


def finite_span(values: Iterable[float]) -> tuple[float, float]:
    """(min, max) over the finite values; (0, 0) when there are none."""
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return (0.0, 0.0)
    return (min(finite), max(finite))


def _node_json(node: RankNode) -> dict:
    element = node.element
    return {
        "id": element.id,
        "name": element.name,
        "kind": element.kind.value,
        "file": element.file,
        "line": element.line,
        "rank": format_rank(node.entry.rank),
        "score": format_score(node.entry.score.value),
        "children": [_node_json(child) for child in node.children],
    }


def render_json(lists: Sequence[RankedList], spectra: SpectraSet) -> str:
    """One JSON section per metric: flat entries plus the nested hierarchy."""
    sections = []
    for ranked in lists:
        entries = []
        for entry in ranked.entries:
            element = spectra.element_by_id[entry.element_id]
            entries.append(
                {
                    "id": element.id,
                    "name": element.name,
                    "file": element.file,
                    "line": element.line,
                    "rank": format_rank(entry.rank),
                    "score": format_score(entry.score.value),
                }
            )
        sections.append(
            {
                "metric": ranked.metric.label,
                "granularity": ranked.granularity.value,
                "tie": ranked.tie.value,
                "entries": entries,
                "hierarchy": (
                    None
                    if ranked.hierarchy is None
                    else [_node_json(root) for root in ranked.hierarchy]
                ),
            }
        )
    return json.dumps(sections, indent=2) + "\n"


# Background reds from faint to saturated, used for terminal shading.
_ANSI_BG = (None, 224, 223, 217, 216, 210, 203, 196, 160, 124)


def _colorize(text: str, level: int) -> str:
    code = _ANSI_BG[level]
    if code is None:
        return text
    fg = 30 if level < 6 else 97
    return f"\x1b[{fg};48;5;{code}m{text}\x1b[0m"


def use_color(stream, env: dict | None = None) -> bool:
    """Terminal color is on only for a tty and with CHARM_NO_COLOR unset."""
    env = os.environ if env is None else env
    if env.get("CHARM_NO_COLOR"):
        return False
    return bool(getattr(stream, "isatty", lambda: False)())


def _table_rows(
    ranked: RankedList, spectra: SpectraSet, include_hierarchy: bool
) -> list[tuple[int, str, str, str, float]]:
    """(indent, name, location, rank, score_value) rows for one section."""
    rows: list[tuple[int, str, str, str, float]] = []
    max_depth = _KIND_DEPTH[ranked.granularity]

    if ranked.hierarchy is not None and include_hierarchy:
        # Group roots per file, files ordered by their best-ranked root.
        files: list[str] = []
        roots_of: dict[str, list[RankNode]] = {}
        for root in ranked.hierarchy:
            file = root.element.file
            if file not in roots_of:
                files.append(file)
                roots_of[file] = []
            roots_of[file].append(root)

        def emit(node: RankNode, indent: int) -> None:
            if _KIND_DEPTH[node.element.kind] > max_depth:
                return
            element = node.element
            rows.append(
                (
                    indent,
                    element.name,
                    f"{element.file}:{element.line}",
                    str(format_rank(node.entry.rank)),
                    node.entry.score.value,
                )
            )
            for child in node.children:
                emit(child, indent + 1)

        for file in files:
            rows.append((0, file, "", "", math.nan))
            for root in roots_of[file]:
                emit(root, 1)
    else:
        for entry in ranked.entries:
            element = spectra.element_by_id[entry.element_id]
            rows.append(
                (
                    0,
                    element.name,
                    f"{element.file}:{element.line}",
                    str(format_rank(entry.rank)),
                    entry.score.value,
                )
            )
    return rows


def render_table(
    lists: Sequence[RankedList],
    spectra: SpectraSet,
    color: bool = False,
    include_hierarchy: bool = True,
) -> str:
    """Fixed-width Name | Location | Rank | Score tables, one per metric.

    Hierarchy is shown with two-space indentation per level, down to the
    requested granularity; file grouping lines carry no rank or score.
    """
    blocks: list[str] = []
    for ranked in lists:
        rows = _table_rows(ranked, spectra, include_hierarchy)
        lo, hi = finite_span(
            value for *_rest, value in rows if not math.isnan(value)
        )
        name_w = max([len("Name")] + [2 * indent + len(name) for indent, name, *_ in rows])
        loc_w = max([len("Location")] + [len(r[2]) for r in rows])
        rank_w = max([len("Rank")] + [len(r[3]) for r in rows])
        score_w = max(len("Score"), 8)

        lines = [
            f"== {ranked.metric.label} | granularity={ranked.granularity.value}"
            f" | tie={ranked.tie.value} ==",
            f"{'Name':<{name_w}}  {'Location':<{loc_w}}  {'Rank':>{rank_w}}  {'Score':>{score_w}}",
        ]
        for indent, name, location, rank, value in rows:
            label = "  " * indent + name
            if math.isnan(value):
                lines.append(label)
                continue
            score_text = f"{format_score(value):>{score_w}}"
            if color:
                score_text = _colorize(score_text, tint_level(value, lo, hi))
            lines.append(
                f"{label:<{name_w}}  {location:<{loc_w}}  {rank:>{rank_w}}  {score_text}"
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
