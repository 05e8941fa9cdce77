"""Fixtures shared by the collector tests."""

from __future__ import annotations

from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent / "data"


@pytest.fixture(scope="session")
def cart_demo_root() -> Path:
    """The bundled running-example project (bug on line 11, 2 of 4 tests fail)."""
    return DATA / "cart_demo"


@pytest.fixture(scope="session")
def expected_method_counts() -> dict[str, tuple[int, int, int, int]]:
    """Method-level ef/ep/nf/np the cart demo must reproduce after rollup."""
    return {
        "addToCart": (2, 2, 0, 0),
        "removeFromCart": (1, 1, 1, 1),
        "printProductsInCart": (0, 0, 2, 2),
        "getProductCount": (2, 2, 0, 0),
    }


@pytest.fixture()
def project(tmp_path):
    """Write a throwaway project from {relative path: source} mappings."""

    def make(files: dict[str, str]) -> Path:
        root = tmp_path / "proj"
        for rel, source in files.items():
            path = root / rel
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(source, encoding="utf-8")
        return root

    return make
