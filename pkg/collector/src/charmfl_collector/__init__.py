"""Spectra collector for Python test suites.

Runs pytest once with a per-test line tracer, derives the class/method/
statement hierarchy from the source, and emits spectra interchange JSON
consumable by the ranking engine.
"""

from .collect import CollectorConfig, build_document, collect
from .errors import (
    CollectorError,
    CollectorWarning,
    CoverageUnavailableError,
    NoTestsCollectedError,
)
from .hierarchy import CodeUnit, SourceHierarchy, extract_hierarchy

__version__ = "0.1.0"

__all__ = [
    "CodeUnit",
    "CollectorConfig",
    "CollectorError",
    "CollectorWarning",
    "CoverageUnavailableError",
    "NoTestsCollectedError",
    "SourceHierarchy",
    "build_document",
    "collect",
    "extract_hierarchy",
]
