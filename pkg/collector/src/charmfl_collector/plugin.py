"""Pytest plugin loaded into the target project's test run.

Activated with `-p charmfl_collector.plugin` and configured through the
CHARMFL_COLLECT_CONFIG environment variable (JSON with root, include, omit,
out). Records the raw material the collector needs: per-test executed lines
for files under the project root, one outcome per test, in execution order.
The raw trace is written as JSON when the session finishes; turning it into
a spectra document happens in the parent process.
"""

from __future__ import annotations

import fnmatch
import json
import os
from pathlib import Path

import pytest

from .tracer import LineTracer

ENV_VAR = "CHARMFL_COLLECT_CONFIG"


def path_matches(rel_path: str, patterns: tuple[str, ...]) -> bool:
    """fnmatch against the full relative path and its basename."""
    name = rel_path.rsplit("/", 1)[-1]
    return any(
        fnmatch.fnmatch(rel_path, pattern) or fnmatch.fnmatch(name, pattern)
        for pattern in patterns
    )


class SpectraRecorder:
    def __init__(self, root: Path, include: tuple[str, ...], omit: tuple[str, ...],
                 out_path: Path) -> None:
        self.root = root.resolve()
        self.include = include
        self.omit = omit
        self.out_path = out_path
        self.tracer = LineTracer(self._should_trace)
        self.order: list[str] = []
        self.outcomes: dict[str, str] = {}

    def _relpath(self, filename: str) -> str | None:
        if filename.startswith("<"):
            return None
        try:
            relative = Path(filename).resolve().relative_to(self.root)
        except ValueError:
            return None
        return relative.as_posix()

    def _should_trace(self, filename: str) -> bool:
        rel = self._relpath(filename)
        if rel is None or not rel.endswith(".py"):
            return False
        if self.include and not path_matches(rel, self.include):
            return False
        return not path_matches(rel, self.omit)

    @pytest.hookimpl(wrapper=True)
    def pytest_runtest_protocol(self, item, nextitem):
        self.order.append(item.nodeid)
        self.tracer.switch_context(item.nodeid)
        self.tracer.start()
        try:
            return (yield)
        finally:
            self.tracer.stop()
            self.tracer.switch_context(None)

    def pytest_runtest_logreport(self, report):
        nodeid = report.nodeid
        if report.when == "setup":
            if report.failed:
                self.outcomes[nodeid] = "error"
            elif report.skipped:
                self.outcomes[nodeid] = "skipped"
        elif report.when == "call":
            if report.passed:
                self.outcomes.setdefault(nodeid, "passed")
            elif report.failed:
                self.outcomes[nodeid] = "failed"
            elif report.skipped:
                self.outcomes[nodeid] = "skipped"
        elif report.when == "teardown" and report.failed:
            if self.outcomes.get(nodeid) == "passed":
                self.outcomes[nodeid] = "error"

    def pytest_sessionfinish(self, session, exitstatus):
        lines: dict[str, list[list]] = {}
        for context, pairs in self.tracer.lines_by_context.items():
            relative = []
            for filename, lineno in pairs:
                rel = self._relpath(filename)
                if rel is not None:
                    relative.append([rel, lineno])
            lines[context] = sorted(relative)
        payload = {
            "tests": [
                {"id": nodeid, "outcome": self.outcomes.get(nodeid, "error")}
                for nodeid in self.order
            ],
            "lines": lines,
        }
        self.out_path.write_text(json.dumps(payload), encoding="utf-8")


def pytest_configure(config):
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return
    options = json.loads(raw)
    recorder = SpectraRecorder(
        root=Path(options["root"]),
        include=tuple(options.get("include", ())),
        omit=tuple(options.get("omit", ())),
        out_path=Path(options["out"]),
    )
    config.pluginmanager.register(recorder, "charmfl-recorder")
