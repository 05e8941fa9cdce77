"""Spectra interchange format: parsing, emission, and shard merging.

The on-disk document is versioned JSON:

    {
      "schema_version": "1.0",
      "tests":    [{"id": "...", "outcome": "passed" | "failed"}, ...],
      "elements": [{"id": "...", "kind": "class" | "method" | "statement",
                    "file": "...", "line": 1, "end_line": 1,
                    "parent_id": "...", "display_name": "..."}, ...],
      "coverage": [[<element index>, ...], ...]   # one list per test
    }

Coverage is stored as per-test lists of indices into `elements` (statement
entries only); spectra are sparse and the format stays human-inspectable.
Tests whose outcome is not a plain pass/fail (skipped, errored in setup) are
dropped with a warning, and unknown extra fields are ignored with a warning
for forward compatibility. Ordering of tests and elements is preserved, so
the in-memory matrix layout is deterministic.
"""

from __future__ import annotations

import json
import posixpath
import warnings
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .errors import (
    DanglingReferenceError,
    EmptyInputError,
    MergeConflictError,
    SchemaError,
    SpectraWarning,
)
from .model import Kind, Outcome, ProgramElement, SpectraSet, TestCase

SCHEMA_VERSION = "1.0"

_TEST_FIELDS = {"id", "outcome"}
_ELEMENT_FIELDS = {"id", "kind", "file", "line", "end_line", "parent_id", "display_name"}
_DOCUMENT_FIELDS = {"schema_version", "tests", "elements", "coverage"}


@dataclass(frozen=True)
class SpectraDocument:
    """A validated interchange document (binary-outcome tests only)."""

    schema_version: str
    tests: tuple[TestCase, ...]
    elements: tuple[ProgramElement, ...]
    coverage: tuple[tuple[int, ...], ...]

    def to_spectra(self) -> SpectraSet:
        return _assemble(self.elements, self.tests, self.coverage)


def normalize_path(path: str) -> str:
    """Normalize a source path to forward slashes without "./" segments."""
    cleaned = posixpath.normpath(path.replace("\\", "/"))
    return cleaned


def _require(mapping: dict, key: str, types: type | tuple, where: str) -> Any:
    if key not in mapping:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = mapping[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(f"{where}: field {key!r} has the wrong type")
    return value


def _warn_extras(mapping: dict, known: set[str], where: str) -> None:
    extras = sorted(set(mapping) - known)
    if extras:
        warnings.warn(
            f"{where}: ignoring unknown fields {extras}", SpectraWarning, stacklevel=3
        )


def parse_document(data: str | bytes) -> SpectraDocument:
    """Parse interchange JSON into a SpectraDocument, validating references."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaError("document root must be a JSON object")

    version = _require(raw, "schema_version", str, "document")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    _warn_extras(raw, _DOCUMENT_FIELDS, "document")

    raw_tests = _require(raw, "tests", list, "document")
    raw_elements = _require(raw, "elements", list, "document")
    raw_coverage = _require(raw, "coverage", list, "document")
    if len(raw_coverage) != len(raw_tests):
        raise SchemaError(
            f"coverage has {len(raw_coverage)} rows for {len(raw_tests)} tests"
        )

    elements: list[ProgramElement] = []
    for i, entry in enumerate(raw_elements):
        if not isinstance(entry, dict):
            raise SchemaError(f"elements[{i}]: must be an object")
        where = f"elements[{i}]"
        element_id = _require(entry, "id", str, where)
        where = f"element {element_id!r}"
        kind_text = _require(entry, "kind", str, where)
        try:
            kind = Kind(kind_text)
        except ValueError:
            raise SchemaError(f"{where}: unknown kind {kind_text!r}") from None
        file = normalize_path(_require(entry, "file", str, where))
        line = _require(entry, "line", int, where)
        end_line = _require(entry, "end_line", int, where)
        parent_id = entry.get("parent_id")
        if parent_id is not None and not isinstance(parent_id, str):
            raise SchemaError(f"{where}: field 'parent_id' has the wrong type")
        display_name = entry.get("display_name")
        if display_name is not None and not isinstance(display_name, str):
            raise SchemaError(f"{where}: field 'display_name' has the wrong type")
        _warn_extras(entry, _ELEMENT_FIELDS, where)
        elements.append(
            ProgramElement(element_id, kind, file, line, end_line, parent_id, display_name)
        )

    element_kinds = [e.kind for e in elements]
    tests: list[TestCase] = []
    coverage: list[tuple[int, ...]] = []
    for i, entry in enumerate(raw_tests):
        if not isinstance(entry, dict):
            raise SchemaError(f"tests[{i}]: must be an object")
        test_id = _require(entry, "id", str, f"tests[{i}]")
        where = f"test {test_id!r}"
        outcome_text = _require(entry, "outcome", str, where)
        _warn_extras(entry, _TEST_FIELDS, where)

        row = raw_coverage[i]
        if not isinstance(row, list):
            raise SchemaError(f"coverage[{i}]: must be a list of element indices")
        indices: set[int] = set()
        for value in row:
            if not isinstance(value, int) or isinstance(value, bool):
                raise SchemaError(f"coverage[{i}]: index {value!r} is not an integer")
            if not 0 <= value < len(elements):
                raise DanglingReferenceError(
                    f"{where}: coverage index {value} is out of range"
                )
            if element_kinds[value] is not Kind.STATEMENT:
                raise DanglingReferenceError(
                    f"{where}: coverage index {value} refers to "
                    f"{element_kinds[value].value} element {elements[value].id!r}, "
                    "expected a statement"
                )
            indices.add(value)

        if outcome_text not in (Outcome.PASSED.value, Outcome.FAILED.value):
            warnings.warn(
                f"{where}: outcome {outcome_text!r} is not pass/fail, test excluded",
                SpectraWarning,
                stacklevel=2,
            )
            continue
        tests.append(TestCase(test_id, Outcome(outcome_text)))
        coverage.append(tuple(sorted(indices)))

    if not tests:
        raise EmptyInputError("document contains no pass/fail tests")
    if not any(k is Kind.STATEMENT for k in element_kinds):
        raise EmptyInputError("document contains no statement elements")

    return SpectraDocument(version, tuple(tests), tuple(elements), tuple(coverage))


def _assemble(
    elements: Sequence[ProgramElement],
    tests: Sequence[TestCase],
    coverage: Sequence[Sequence[int]],
) -> SpectraSet:
    """Densify per-test index lists into the statement matrix."""
    column_of: dict[int, int] = {}
    for index, element in enumerate(elements):
        if element.kind is Kind.STATEMENT:
            column_of[index] = len(column_of)

    bits = np.zeros((len(tests), len(column_of)), dtype=bool)
    for row, indices in enumerate(coverage):
        for index in indices:
            bits[row, column_of[index]] = True
    return SpectraSet.from_bits(elements, tests, bits)


def parse_spectra(data: str | bytes) -> SpectraSet:
    """Parse interchange JSON straight to a validated SpectraSet."""
    return parse_document(data).to_spectra()


def load_spectra(path: str) -> SpectraSet:
    """Read and parse an interchange document from disk."""
    with open(path, "rb") as handle:
        return parse_spectra(handle.read())


def emit_spectra(spectra: SpectraSet) -> str:
    """Serialize a SpectraSet back to interchange JSON.

    parse_spectra(emit_spectra(s)) reproduces `s` field for field; key and
    array order are stable so emission is byte-deterministic.
    """
    index_of = {element.id: i for i, element in enumerate(spectra.elements)}
    statements = [e.id for e in spectra.elements if e.kind is Kind.STATEMENT]

    elements_json: list[dict] = []
    for element in spectra.elements:
        entry: dict[str, Any] = {
            "id": element.id,
            "kind": element.kind.value,
            "file": element.file,
            "line": element.line,
            "end_line": element.end_line,
        }
        if element.parent_id is not None:
            entry["parent_id"] = element.parent_id
        if element.display_name is not None:
            entry["display_name"] = element.display_name
        elements_json.append(entry)

    coverage_json: list[list[int]] = []
    for row in range(len(spectra.tests)):
        covered = [
            index_of[statements[col]]
            for col in range(len(statements))
            if spectra.matrix.bits[row, col]
        ]
        coverage_json.append(covered)

    document = {
        "schema_version": SCHEMA_VERSION,
        "tests": [{"id": t.id, "outcome": t.outcome.value} for t in spectra.tests],
        "elements": elements_json,
        "coverage": coverage_json,
    }
    return json.dumps(document, indent=2) + "\n"


def merge_runs(documents: Sequence[SpectraDocument]) -> SpectraSet:
    """Concatenate shard documents that share one element universe.

    Shards must carry identical elements arrays and disjoint test ids (one
    document per test shard); the merged matrix stacks their rows in input
    order.
    """
    if not documents:
        raise EmptyInputError("no documents to merge")
    first = documents[0]
    tests: list[TestCase] = []
    coverage: list[tuple[int, ...]] = []
    seen: set[str] = set()
    for position, document in enumerate(documents):
        if document.elements != first.elements:
            raise MergeConflictError(
                f"documents[{position}]: elements differ from documents[0]"
            )
        for test, row in zip(document.tests, document.coverage):
            if test.id in seen:
                raise MergeConflictError(f"duplicate test id {test.id!r} across documents")
            seen.add(test.id)
            tests.append(test)
            coverage.append(row)
    return _assemble(first.elements, tests, coverage)
