#!/usr/bin/env python3
"""Load a spectra document and inspect the hit matrix and basic statistics.

Walks through the shopping-cart example: four methods, four tests, two of
which fail because of a bug on line 11 of example.py.
"""
from pathlib import Path

from charmfl import Kind, compute_counts, load_spectra, rollup_coverage

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

spectra = load_spectra(str(FIXTURES / "cart.json"))
print(f"{len(spectra.tests)} tests, "
      f"{len(spectra.elements_of_kind(Kind.STATEMENT))} statements, "
      f"{len(spectra.elements_of_kind(Kind.METHOD))} methods")
print(f"outcomes: {[t.outcome.value for t in spectra.tests]}")

# The raw matrix is statement level: one row per test, one column per line.
print("\nstatement hit matrix (rows = tests):")
for i, test_id in enumerate(spectra.matrix.tests):
    row = "".join("x" if hit else "." for hit in spectra.matrix.bits[i])
    print(f"  {test_id}  {row}")

# Zooming out: a method counts as covered when any of its statements ran.
method_matrix = rollup_coverage(spectra, Kind.METHOD)
print("\nmethod hit matrix with the four basic statistics:")
counts = compute_counts(method_matrix, spectra.outcomes)
header = " ".join(t for t in method_matrix.tests)
print(f"  {'method':<20} {header}   ef ep nf np")
for element_id in method_matrix.elements:
    element = spectra.element_by_id[element_id]
    hits = "  ".join(str(int(b)) for b in method_matrix.column(element_id))
    c = counts[element_id]
    print(f"  {element.name:<20} {hits}    {c.ef}  {c.ep}  {c.nf}  {c.np}")

# addToCart and getProductCount ran under every test including both failing
# ones (ef=2, ep=2); printProductsInCart never ran at all.
