#!/usr/bin/env python3
"""Score the same spectra under all four metrics and compare side by side.

Tarantula cannot separate the three covered methods here (they tie at 0.5),
while Ochiai and DStar both prefer the methods covered by every failing
test. Wong2 collapses to ef - ep, which is 0 for all of them.
"""
from pathlib import Path

from charmfl import DEFAULT_METRICS, Kind, load_spectra, score_all

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

spectra = load_spectra(str(FIXTURES / "cart.json"))
counts = spectra.counts(Kind.METHOD)
scored = score_all(counts, DEFAULT_METRICS)

labels = [m.label for m in DEFAULT_METRICS]
print(f"{'method':<20}" + "".join(f"{label:>11}" for label in labels))
for element_id, per_metric in scored.items():
    name = spectra.element_by_id[element_id].name
    cells = "".join(f"{per_metric[m].value:>11.4f}" for m in DEFAULT_METRICS)
    print(f"{name:<20}{cells}")

# DStar's exponent is tunable; higher exponents spread the top of the list.
from charmfl import parse_metric

for text in ("dstar", "dstar3", "dstar5"):
    metric = parse_metric(text)
    values = {spectra.element_by_id[eid].name: per[metric].value
              for eid, per in score_all(counts, [metric]).items()}
    print(f"\n{metric.label}: {values}")
