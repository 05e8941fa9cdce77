"""Collector error and warning types."""


class CollectorError(Exception):
    """Base class for collection failures."""


class NoTestsCollectedError(CollectorError):
    """The test run produced no pass/fail tests; nothing was written."""


class CoverageUnavailableError(CollectorError):
    """Instrumented test execution failed; nothing was written."""


class CollectorWarning(UserWarning):
    """Non-fatal findings: excluded tests, unparseable source files."""
