"""Shared fixtures: the running-example spectra plus random-instance builders."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from charmfl import Kind, Outcome, ProgramElement, SpectraSet, TestCase, load_spectra

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

CART_JSON = FIXTURES / "cart.json"
CART_SOURCE_ROOT = FIXTURES

# Method-level ef/ep/nf/np of the shopping-cart example, keyed by method name.
CART_METHOD_COUNTS = {
    "addToCart": (2, 2, 0, 0),
    "removeFromCart": (1, 1, 1, 1),
    "printProductsInCart": (0, 0, 2, 2),
    "getProductCount": (2, 2, 0, 0),
}

# Method-level hit rows (T1..T4), same key.
CART_METHOD_ROWS = {
    "addToCart": [1, 1, 1, 1],
    "removeFromCart": [0, 1, 1, 0],
    "printProductsInCart": [0, 0, 0, 0],
    "getProductCount": [1, 1, 1, 1],
}

FAULTY_LINE = ("example.py", 11)


@pytest.fixture(scope="session")
def cart_spectra() -> SpectraSet:
    return load_spectra(str(CART_JSON))


def random_spectra(rng: random.Random, density: float = 0.35) -> SpectraSet:
    """A small random spectra set with a partly random hierarchy.

    Bounded at 8 tests x 32 statements so brute-force oracles stay cheap.
    Some statements and methods are left parentless on purpose.
    """
    n_tests = rng.randint(1, 8)
    n_statements = rng.randint(1, 32)
    n_classes = rng.randint(0, 2)
    n_methods = rng.randint(1, 5)

    elements: list[ProgramElement] = []
    class_ids: list[str] = []
    for c in range(n_classes):
        cid = f"c{c}"
        elements.append(
            ProgramElement(cid, Kind.CLASS, "f.py", 1 + 500 * c, 400 + 500 * c, None, f"C{c}")
        )
        class_ids.append(cid)

    method_ids: list[str] = []
    for m in range(n_methods):
        mid = f"m{m}"
        parent = rng.choice(class_ids + [None]) if class_ids else None
        elements.append(
            ProgramElement(mid, Kind.METHOD, "f.py", 1 + 10 * m, 9 + 10 * m, parent, mid)
        )
        method_ids.append(mid)

    for s in range(n_statements):
        parent = rng.choice(method_ids + [None])
        elements.append(
            ProgramElement(f"s{s}", Kind.STATEMENT, "f.py", 1000 + s, 1000 + s, parent)
        )

    tests = [
        TestCase(f"t{i}", rng.choice((Outcome.PASSED, Outcome.FAILED)))
        for i in range(n_tests)
    ]
    bits = [
        [rng.random() < density for _ in range(n_statements)] for _ in range(n_tests)
    ]
    return SpectraSet.from_bits(elements, tests, bits)


@pytest.fixture()
def boundary_spectra() -> SpectraSet:
    """30 statements where the faulty line m.py:11 has Min rank exactly 11.

    Lines 1..10 are covered by both failing tests only (top group under all
    four metrics), line 11 by one failing and one passing test, and lines
    12..30 by nothing.
    """
    elements = [
        ProgramElement(f"m.py:{n}", Kind.STATEMENT, "m.py", n, n) for n in range(1, 31)
    ]
    tests = [
        TestCase("f1", Outcome.FAILED),
        TestCase("f2", Outcome.FAILED),
        TestCase("p1", Outcome.PASSED),
        TestCase("p2", Outcome.PASSED),
    ]
    rows = {
        "f1": set(range(10)) | {10},
        "f2": set(range(10)),
        "p1": {10},
        "p2": set(),
    }
    bits = [[col in rows[t.id] for col in range(30)] for t in tests]
    return SpectraSet.from_bits(elements, tests, bits)
