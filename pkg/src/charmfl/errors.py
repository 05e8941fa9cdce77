"""Exception and warning types raised by the fault localization engine."""


class SpectraError(Exception):
    """Base class for every engine error."""


class SchemaError(SpectraError):
    """An interchange document field is missing, ill-typed, or out of range."""


class DanglingReferenceError(SpectraError):
    """A parent id or coverage index points at nothing, or at the wrong kind."""


class EmptyInputError(SpectraError):
    """A spectra set needs at least one test and one statement."""


class MergeConflictError(SpectraError):
    """Shard documents disagree on elements or share a test id."""


class DimensionMismatchError(SpectraError):
    """Outcome vector length does not match the number of matrix rows."""


class UnknownGranularityError(SpectraError):
    """The spectra contain no elements of the requested granularity."""


class UnknownMetricError(SpectraError):
    """Metric name (or DStar exponent) not recognized."""


class MissingGranularityError(SpectraError):
    """Hierarchy building requires scores for every level present."""


class UnresolvedTruthError(SpectraError):
    """A ground-truth location does not resolve to exactly one statement."""


class SpectraWarning(UserWarning):
    """Non-fatal ingest or rendering findings (skipped tests, unknown fields,
    unreadable source files)."""
