#!/usr/bin/env python3
"""Tie-breaking strategies and the hierarchical investigation order.

Equal scores form a tie group spanning sorted positions p..q; Min assigns p
to every member, Max assigns q, Average the midpoint. The hierarchy sorts
each level by its own scores, so statements of a suspect method are visited
before any statement of a cleaner one.
"""
from pathlib import Path

from charmfl import (
    Kind,
    Score,
    TARANTULA,
    TieStrategy,
    assign_ranks,
    load_spectra,
    rank_spectra,
)

scores = {name: Score(value, TARANTULA)
          for name, value in {"a": 0.7, "b": 0.5, "c": 0.5, "d": 0.0}.items()}
for mode in TieStrategy:
    ranked = assign_ranks(scores, mode)
    print(f"{mode.value:<8}", {e.element_id: e.rank for e in ranked})

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
spectra = load_spectra(str(FIXTURES / "cart.json"))

print("\nhierarchical traversal (method level first, then its statements):")
ranked = rank_spectra(spectra, TARANTULA, Kind.STATEMENT, TieStrategy.MIN)
for node in ranked.iter_hierarchy():
    indent = "  " if node.element.kind is Kind.METHOD else "    "
    if node.element.kind is Kind.METHOD:
        print(f"{indent}{node.element.name}  score={node.entry.score.value:.4f}")
    else:
        print(f"{indent}line {node.element.line:<3} score={node.entry.score.value:.4f}")
