#!/usr/bin/env python3
"""Render the three report formats to demos/out/.

The HTML report is a single self-contained file: ranked tables per metric,
a collapsible class/method/statement tree, and tinted source listings where
darker red means more suspicious. Open demos/out/report.html in a browser.
"""
from pathlib import Path

from charmfl import (
    DEFAULT_METRICS,
    Kind,
    load_spectra,
    rank_spectra,
    render_html,
    render_json,
    render_table,
)

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "fixtures"
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

spectra = load_spectra(str(FIXTURES / "cart.json"))
lists = [rank_spectra(spectra, metric, Kind.STATEMENT) for metric in DEFAULT_METRICS]

table = render_table(lists[:1], spectra)
print(table)

(OUT / "report.json").write_text(render_json(lists, spectra), newline="\n")
(OUT / "report.html").write_text(
    render_html(lists, spectra, source_root=str(FIXTURES)), newline="\n"
)
print(f"wrote {OUT / 'report.json'}")
print(f"wrote {OUT / 'report.html'}")
