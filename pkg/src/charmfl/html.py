"""Self-contained HTML report: ranked tables, a collapsible hierarchy, and
tinted source listings.

Everything is inlined (styles only, no scripts, no external references) so
the file opens anywhere. Each ranked element row carries an anchor; when a
source root is supplied, rows link to line-anchored source panes whose lines
are shaded white to dark red in proportion to the statement's score under
the first selected metric. Unreadable source files degrade to tables-only
output with a warning; the report is still produced.
"""

from __future__ import annotations

import html as _html
import warnings
from pathlib import Path
from typing import Mapping, Sequence

from .errors import SpectraWarning
from .model import Kind, SpectraSet
from .ranking import RankedList, RankNode
from .report import finite_span, format_rank, format_score, tint_level

_STYLE = """
body { font-family: sans-serif; margin: 1.5em; color: #222; }
h1 { font-size: 1.4em; } h2 { font-size: 1.15em; margin-top: 1.6em; }
table.rank { border-collapse: collapse; margin: 0.6em 0; }
table.rank th, table.rank td { border: 1px solid #bbb; padding: 2px 8px; text-align: left; }
table.rank th { background: #eee; }
td.num { text-align: right; font-variant-numeric: tabular-nums; }
details { margin-left: 1em; } summary { cursor: pointer; }
div.leaf { margin-left: 2.4em; font-family: monospace; }
pre.src { border: 1px solid #ccc; padding: 0.4em; line-height: 1.3; }
pre.src span { display: block; }
a { color: #06c; text-decoration: none; } a:hover { text-decoration: underline; }
.level-0 { }
.level-1 { background: #fff5f5; }
.level-2 { background: #ffe3e3; }
.level-3 { background: #ffc9c9; }
.level-4 { background: #ffa8a8; }
.level-5 { background: #ff8787; }
.level-6 { background: #ff6b6b; }
.level-7 { background: #fa5252; color: #fff; }
.level-8 { background: #e03131; color: #fff; }
.level-9 { background: #a61e1e; color: #fff; }
""".strip()


def _esc(text: str) -> str:
    return _html.escape(str(text), quote=True)


def _statement_scores(ranked: RankedList, spectra: SpectraSet) -> dict[str, float]:
    """Statement-level score per element id for one metric."""
    if ranked.granularity is Kind.STATEMENT:
        return {e.element_id: e.score.value for e in ranked.entries}
    scores: dict[str, float] = {}
    for node in ranked.iter_hierarchy():
        if node.element.kind is Kind.STATEMENT:
            scores[node.element.id] = node.entry.score.value
    return scores


def _source_files(spectra: SpectraSet, source_root: str | None) -> dict[str, Path]:
    """Referenced files that actually resolve under the source root."""
    if source_root is None:
        return {}
    resolved: dict[str, Path] = {}
    for file in sorted({e.file for e in spectra.elements}):
        path = Path(source_root) / file
        if path.is_file():
            resolved[file] = path
        else:
            warnings.warn(
                f"source file not found, omitting listing: {path}",
                SpectraWarning,
                stacklevel=3,
            )
    return resolved


def _location_cell(file: str, line: int, file_anchor: Mapping[str, int]) -> str:
    label = _esc(f"{file}:{line}")
    if file in file_anchor:
        return f'<a href="#src-{file_anchor[file]}-L{line}">{label}</a>'
    return label


def _tree_html(
    node: RankNode, file_anchor: Mapping[str, int], lo: float, hi: float
) -> str:
    element = node.element
    value = node.entry.score.value
    level = tint_level(value, lo, hi)
    label = (
        f'<span class="level-{level}" data-score="{format_score(value)}">'
        f"{_esc(element.name)}</span> "
        f"[{_location_cell(element.file, element.line, file_anchor)}] "
        f"rank {format_rank(node.entry.rank)}, score {format_score(value)}"
    )
    if not node.children:
        return f'<div class="leaf">{label}</div>'
    inner = "".join(_tree_html(child, file_anchor, lo, hi) for child in node.children)
    return f"<details open><summary>{label}</summary>{inner}</details>"


def render_html(
    lists: Sequence[RankedList],
    spectra: SpectraSet,
    source_root: str | None = None,
) -> str:
    """Render the full report as one self-contained HTML document."""
    sources = _source_files(spectra, source_root)
    file_anchor = {file: i for i, file in enumerate(sorted(sources))}

    parts: list[str] = [
        "<!DOCTYPE html>",
        '<html lang="en"><head><meta charset="utf-8">',
        "<title>Fault localization report</title>",
        f"<style>{_STYLE}</style>",
        "</head><body>",
        "<h1>Fault localization report</h1>",
    ]

    for ranked in lists:
        label = ranked.metric.label
        lo, hi = finite_span(e.score.value for e in ranked.entries)
        parts.append(
            f'<section><h2>{_esc(label)} '
            f'<small>(granularity={_esc(ranked.granularity.value)}, '
            f"tie={_esc(ranked.tie.value)})</small></h2>"
        )
        parts.append('<table class="rank">')
        parts.append("<tr><th>Name</th><th>Location</th><th>Rank</th><th>Score</th></tr>")
        for position, entry in enumerate(ranked.entries, start=1):
            element = spectra.element_by_id[entry.element_id]
            value = entry.score.value
            level = tint_level(value, lo, hi)
            parts.append(
                f'<tr id="el-{_esc(label)}-{position}" class="level-{level}"'
                f' data-score="{format_score(value)}">'
                f"<td>{_esc(element.name)}</td>"
                f"<td>{_location_cell(element.file, element.line, file_anchor)}</td>"
                f'<td class="num">{format_rank(entry.rank)}</td>'
                f'<td class="num">{format_score(value)}</td></tr>'
            )
        parts.append("</table>")

        if ranked.hierarchy is not None:
            tree_lo, tree_hi = finite_span(
                node.entry.score.value for node in ranked.iter_hierarchy()
            )
            parts.append("<h3>Hierarchy</h3>")
            for root in ranked.hierarchy:
                parts.append(_tree_html(root, file_anchor, tree_lo, tree_hi))
        parts.append("</section>")

    if sources:
        # Source lines are shaded by the first metric's statement scores.
        scores = _statement_scores(lists[0], spectra) if lists else {}
        line_score: dict[tuple[str, int], float] = {}
        for element_id, value in scores.items():
            element = spectra.element_by_id[element_id]
            line_score[(element.file, element.line)] = value
        lo, hi = finite_span(scores.values())

        parts.append("<section><h2>Sources</h2>")
        for file, path in sorted(sources.items()):
            index = file_anchor[file]
            parts.append(f"<h3>{_esc(file)}</h3>")
            parts.append('<pre class="src">')
            text = path.read_text(encoding="utf-8", errors="replace")
            for number, line in enumerate(text.splitlines(), start=1):
                value = line_score.get((file, number))
                level = 0 if value is None else tint_level(value, lo, hi)
                data = "" if value is None else f' data-score="{format_score(value)}"'
                parts.append(
                    f'<span id="src-{index}-L{number}" class="level-{level}"{data}>'
                    f"{number:>4} | {_esc(line)}</span>"
                )
            parts.append("</pre>")
        parts.append("</section>")

    parts.append("</body></html>")
    return "\n".join(parts) + "\n"
