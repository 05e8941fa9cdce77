"""Core spectra data model.

Program elements at three granularities, binary test outcomes, the per-test
hit matrix over statements, granularity rollup ("zooming out"), and the four
basic per-element statistics (ef / ep / nf / np) that every suspiciousness
metric consumes.

All types are immutable after construction and safe to share across threads;
`rollup_coverage` and `compute_counts` are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DanglingReferenceError,
    DimensionMismatchError,
    EmptyInputError,
    SchemaError,
    UnknownGranularityError,
)


class Kind(str, Enum):
    """Element granularity. Classes contain methods, methods contain statements."""

    CLASS = "class"
    METHOD = "method"
    STATEMENT = "statement"


# Required parent kind per element kind; None means "never has a parent".
_PARENT_KIND: dict[Kind, Kind | None] = {
    Kind.STATEMENT: Kind.METHOD,
    Kind.METHOD: Kind.CLASS,
    Kind.CLASS: None,
}


class Outcome(str, Enum):
    PASSED = "passed"
    FAILED = "failed"


@dataclass(frozen=True)
class ProgramElement:
    """One addressable unit of code: a class, a method, or a statement.

    `line`/`end_line` are 1-based and inclusive; statements span a single
    line. `parent_id` links a statement to its method and a method to its
    class; top-level statements and methods may have no parent.
    """

    id: str
    kind: Kind
    file: str
    line: int
    end_line: int
    parent_id: str | None = None
    display_name: str | None = None

    def __post_init__(self) -> None:
        if self.line < 1 or self.end_line < self.line:
            raise SchemaError(
                f"element {self.id!r}: invalid line span {self.line}..{self.end_line}"
            )

    @property
    def name(self) -> str:
        """Human-readable label; statements fall back to their line number."""
        if self.display_name:
            return self.display_name
        if self.kind is Kind.STATEMENT:
            return f"line {self.line}"
        return self.id


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # domain type, not a pytest class

    id: str
    outcome: Outcome

    @property
    def failed(self) -> bool:
        return self.outcome is Outcome.FAILED


@dataclass(frozen=True)
class SpectrumCounts:
    """The four basic statistics of one element under one test run.

    ef / ep: failed / passed tests covering the element.
    nf / np: failed / passed tests not covering it.
    """

    ef: int
    ep: int
    nf: int
    np: int

    def __post_init__(self) -> None:
        if min(self.ef, self.ep, self.nf, self.np) < 0:
            raise SchemaError(f"negative spectrum count: {self}")

    @property
    def total_failed(self) -> int:
        return self.ef + self.nf

    @property
    def total_passed(self) -> int:
        return self.ep + self.np


class CoverageMatrix:
    """Binary hit matrix: rows are tests, columns are elements of one kind.

    `bits[i, j]` is True iff element j executed under test i. The backing
    array is frozen; treat instances as values.
    """

    __slots__ = ("tests", "elements", "bits")

    def __init__(
        self,
        tests: Iterable[str],
        elements: Iterable[str],
        bits: np.ndarray | Sequence[Sequence[int]],
    ) -> None:
        tests = tuple(tests)
        elements = tuple(elements)
        grid = np.array(bits, dtype=bool)
        if grid.ndim != 2 or grid.shape != (len(tests), len(elements)):
            raise DimensionMismatchError(
                f"matrix shape {grid.shape} does not match "
                f"{len(tests)} tests x {len(elements)} elements"
            )
        grid.setflags(write=False)
        self.tests = tests
        self.elements = elements
        self.bits = grid

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoverageMatrix):
            return NotImplemented
        return (
            self.tests == other.tests
            and self.elements == other.elements
            and np.array_equal(self.bits, other.bits)
        )

    def __hash__(self) -> int:  # identity hash; matrices are not dict keys
        return object.__hash__(self)

    def __repr__(self) -> str:
        return f"CoverageMatrix({len(self.tests)} tests x {len(self.elements)} elements)"

    def row(self, test_id: str) -> np.ndarray:
        return self.bits[self.tests.index(test_id)]

    def column(self, element_id: str) -> np.ndarray:
        return self.bits[:, self.elements.index(element_id)]


@dataclass(frozen=True)
class SpectraSet:
    """A validated spectra bundle: elements of all kinds, tests, and the
    statement-level coverage matrix.

    Matrix rows follow `tests` order and columns follow the order of
    statement-kind entries in `elements`, so layouts are deterministic.
    """

    elements: tuple[ProgramElement, ...]
    tests: tuple[TestCase, ...]
    matrix: CoverageMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "tests", tuple(self.tests))
        self._validate()

    def _validate(self) -> None:
        if not self.tests:
            raise EmptyInputError("a spectra set needs at least one test")

        seen: set[str] = set()
        for element in self.elements:
            if element.id in seen:
                raise SchemaError(f"duplicate element id {element.id!r}")
            seen.add(element.id)
        test_ids = set()
        for test in self.tests:
            if test.id in test_ids:
                raise SchemaError(f"duplicate test id {test.id!r}")
            test_ids.add(test.id)

        by_id = {e.id: e for e in self.elements}
        for element in self.elements:
            required = _PARENT_KIND[element.kind]
            if element.parent_id is None:
                continue
            if required is None:
                raise SchemaError(
                    f"element {element.id!r}: a {element.kind.value} cannot have a parent"
                )
            parent = by_id.get(element.parent_id)
            if parent is None:
                raise DanglingReferenceError(
                    f"element {element.id!r}: unknown parent {element.parent_id!r}"
                )
            if parent.kind is not required:
                raise SchemaError(
                    f"element {element.id!r}: parent {parent.id!r} is a "
                    f"{parent.kind.value}, expected a {required.value}"
                )

        statement_ids = tuple(e.id for e in self.elements if e.kind is Kind.STATEMENT)
        if not statement_ids:
            raise EmptyInputError("a spectra set needs at least one statement")
        if self.matrix.elements != statement_ids:
            raise SchemaError("matrix columns must follow statement declaration order")
        if self.matrix.tests != tuple(t.id for t in self.tests):
            raise SchemaError("matrix rows must follow test declaration order")

    @classmethod
    def from_bits(
        cls,
        elements: Iterable[ProgramElement],
        tests: Iterable[TestCase],
        bits: np.ndarray | Sequence[Sequence[int]],
    ) -> "SpectraSet":
        """Build a SpectraSet from a raw statement grid (rows follow `tests`)."""
        elements = tuple(elements)
        tests = tuple(tests)
        statement_ids = tuple(e.id for e in elements if e.kind is Kind.STATEMENT)
        matrix = CoverageMatrix((t.id for t in tests), statement_ids, bits)
        return cls(elements, tests, matrix)

    @cached_property
    def element_by_id(self) -> dict[str, ProgramElement]:
        return {e.id: e for e in self.elements}

    @cached_property
    def outcomes(self) -> tuple[Outcome, ...]:
        return tuple(t.outcome for t in self.tests)

    @property
    def total_failed(self) -> int:
        return sum(1 for t in self.tests if t.failed)

    @property
    def total_passed(self) -> int:
        return len(self.tests) - self.total_failed

    def elements_of_kind(self, kind: Kind) -> tuple[ProgramElement, ...]:
        return tuple(e for e in self.elements if e.kind is kind)

    @cached_property
    def present_kinds(self) -> tuple[Kind, ...]:
        """Granularities that actually occur, coarsest first."""
        return tuple(
            k for k in (Kind.CLASS, Kind.METHOD, Kind.STATEMENT) if self.elements_of_kind(k)
        )

    def children_of(self, element_id: str) -> tuple[ProgramElement, ...]:
        return tuple(e for e in self.elements if e.parent_id == element_id)

    def counts(self, granularity: Kind) -> dict[str, SpectrumCounts]:
        """Rollup to `granularity` and compute per-element statistics."""
        return compute_counts(rollup_coverage(self, granularity), self.outcomes)


def _owner_at(spectra: SpectraSet, statement: ProgramElement, granularity: Kind) -> str | None:
    """Id of the ancestor holding `statement` at `granularity`, if any."""
    if statement.parent_id is None:
        return None
    if granularity is Kind.METHOD:
        return statement.parent_id
    method = spectra.element_by_id[statement.parent_id]
    return method.parent_id


def rollup_coverage(spectra: SpectraSet, granularity: Kind) -> CoverageMatrix:
    """Coverage matrix at the requested granularity.

    A method (or class) is covered by a test iff any of its descendant
    statements is; statement granularity returns the original matrix
    unchanged. Raises UnknownGranularityError when the spectra contain no
    elements of the requested kind (e.g. class level for a module without
    classes).
    """
    if granularity is Kind.STATEMENT:
        return spectra.matrix

    targets = spectra.elements_of_kind(granularity)
    if not targets:
        raise UnknownGranularityError(
            f"spectra contain no {granularity.value}-level elements"
        )

    columns_of: dict[str, list[int]] = {}
    statements = spectra.elements_of_kind(Kind.STATEMENT)
    for j, statement in enumerate(statements):
        owner = _owner_at(spectra, statement, granularity)
        if owner is not None:
            columns_of.setdefault(owner, []).append(j)

    bits = np.zeros((len(spectra.tests), len(targets)), dtype=bool)
    for k, target in enumerate(targets):
        cols = columns_of.get(target.id)
        if cols:
            bits[:, k] = spectra.matrix.bits[:, cols].any(axis=1)
    return CoverageMatrix(spectra.matrix.tests, (t.id for t in targets), bits)


def compute_counts(
    matrix: CoverageMatrix, outcomes: Sequence[Outcome]
) -> dict[str, SpectrumCounts]:
    """Four basic statistics for every matrix column, keyed by element id."""
    if len(outcomes) != len(matrix.tests):
        raise DimensionMismatchError(
            f"{len(outcomes)} outcomes for {len(matrix.tests)} matrix rows"
        )
    failed = np.array([o is Outcome.FAILED for o in outcomes], dtype=bool)
    total_failed = int(failed.sum())
    total_passed = len(outcomes) - total_failed

    ef = matrix.bits[failed].sum(axis=0) if total_failed else np.zeros(len(matrix.elements), int)
    ep = matrix.bits[~failed].sum(axis=0) if total_passed else np.zeros(len(matrix.elements), int)
    return {
        element_id: SpectrumCounts(
            ef=int(ef[j]),
            ep=int(ep[j]),
            nf=total_failed - int(ef[j]),
            np=total_passed - int(ep[j]),
        )
        for j, element_id in enumerate(matrix.elements)
    }
