"""Per-test line tracing on sys.settrace.

One tracer instance lives for the whole test session; the active dynamic
context (a test id) is switched at every test boundary, so a single run of
the suite attributes each executed line to the test that triggered it,
fixtures and setup included. Lines executed outside any context (imports at
collection time) are dropped. Only files accepted by the filename filter get
a local trace function, which keeps overhead away from the test framework's
own frames.

Only the current thread is traced; parallel test execution is out of scope.
"""

from __future__ import annotations

import sys
from typing import Callable


class LineTracer:
    def __init__(self, should_trace: Callable[[str], bool]) -> None:
        self._should_trace = should_trace
        self._decision_cache: dict[str, bool] = {}
        self._context: str | None = None
        #: context -> set of (co_filename, lineno) pairs
        self.lines_by_context: dict[str, set[tuple[str, int]]] = {}

    def switch_context(self, context: str | None) -> None:
        self._context = context

    def start(self) -> None:
        sys.settrace(self._global_trace)

    def stop(self) -> None:
        sys.settrace(None)

    def _global_trace(self, frame, event, arg):
        if event != "call":
            return None
        filename = frame.f_code.co_filename
        decision = self._decision_cache.get(filename)
        if decision is None:
            decision = self._should_trace(filename)
            self._decision_cache[filename] = decision
        return self._local_trace if decision else None

    def _local_trace(self, frame, event, arg):
        if event == "line" and self._context is not None:
            self.lines_by_context.setdefault(self._context, set()).add(
                (frame.f_code.co_filename, frame.f_lineno)
            )
        return self._local_trace
