"""Single-pass spectra collection for Python projects.

`collect` runs the project's pytest suite once in a subprocess with the
tracing plugin enabled, then turns the raw per-test line trace into a
spectra interchange document:

* every line covered by at least one test becomes a statement element,
  parented to the innermost enclosing function (or a synthetic "<module>"
  method per file for top-level code);
* every class and function found in a covered file becomes an element even
  when nothing in it ran, so never-executed methods still appear with
  all-zero rows after rollup;
* methods outside any class attach to a synthetic "<module>" class per file,
  but only when the project has real classes somewhere, so a classless
  project keeps its class level genuinely absent;
* tests are sorted by id and only pass/fail outcomes are kept (skips and
  setup errors are dropped with a warning).

Nothing is written when the run fails or yields no usable tests.
"""

from __future__ import annotations

import json
import os
import shlex
import subprocess
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CollectorWarning, CoverageUnavailableError, NoTestsCollectedError
from .hierarchy import SourceHierarchy, extract_hierarchy
from .plugin import ENV_VAR

SCHEMA_VERSION = "1.0"

# pytest exit codes (pytest.ExitCode): 2 interrupted, 3 internal error,
# 4 usage error, 5 no tests collected.
_NO_TESTS_EXIT = 5
_BROKEN_EXITS = (2, 3, 4)


@dataclass
class CollectorConfig:
    """One collection run: where the project lives and what to measure."""

    project_root: Path
    output_path: Path
    test_selector: str = ""
    include: tuple[str, ...] = ()
    omit: tuple[str, ...] = ()
    pytest_args: tuple[str, ...] = field(default=("-q",))

    def __post_init__(self) -> None:
        self.project_root = Path(self.project_root)
        self.output_path = Path(self.output_path)
        if not self.project_root.is_dir():
            raise CoverageUnavailableError(
                f"project root does not exist: {self.project_root}"
            )


def run_traced_pytest(config: CollectorConfig, trace_path: Path) -> dict:
    """Run the suite once with the plugin enabled and load the raw trace."""
    env = dict(os.environ)
    env[ENV_VAR] = json.dumps(
        {
            "root": str(config.project_root.resolve()),
            "include": list(config.include),
            "omit": list(config.omit),
            "out": str(trace_path),
        }
    )
    env["PYTHONDONTWRITEBYTECODE"] = "1"
    # An explicit start path keeps collection anchored to the project even
    # when an enclosing repository carries its own pytest configuration.
    selector = shlex.split(config.test_selector) or ["."]
    command = [
        sys.executable,
        "-m",
        "pytest",
        "-p",
        "charmfl_collector.plugin",
        "-p",
        "no:cacheprovider",
        *config.pytest_args,
        *selector,
    ]
    process = subprocess.run(
        command,
        cwd=config.project_root,
        env=env,
        capture_output=True,
        text=True,
    )
    if process.returncode == _NO_TESTS_EXIT:
        raise NoTestsCollectedError(
            f"pytest collected no tests in {config.project_root}"
        )
    if process.returncode in _BROKEN_EXITS or not trace_path.is_file():
        tail = (process.stderr or process.stdout).strip().splitlines()[-5:]
        raise CoverageUnavailableError(
            "instrumented pytest run failed "
            f"(exit {process.returncode}): " + " | ".join(tail)
        )
    return json.loads(trace_path.read_text(encoding="utf-8"))


def _statement(file: str, line: int, parent_id: str) -> dict:
    return {
        "id": f"{file}:{line}",
        "kind": "statement",
        "file": file,
        "line": line,
        "end_line": line,
        "parent_id": parent_id,
    }


def build_document(root: Path, trace: dict) -> dict:
    """Raw trace in, spectra interchange document out."""
    tests: list[dict] = []
    for entry in trace["tests"]:
        if entry["outcome"] in ("passed", "failed"):
            tests.append(entry)
        else:
            warnings.warn(
                f"test {entry['id']!r} excluded (outcome {entry['outcome']!r})",
                CollectorWarning,
                stacklevel=2,
            )
    if not tests:
        raise NoTestsCollectedError("no tests with a pass/fail outcome")
    tests.sort(key=lambda entry: entry["id"])

    lines_of_test = {
        entry["id"]: {tuple(pair) for pair in trace["lines"].get(entry["id"], [])}
        for entry in tests
    }
    covered: dict[str, set[int]] = {}
    for pairs in lines_of_test.values():
        for file, line in pairs:
            covered.setdefault(file, set()).add(line)

    hierarchies: dict[str, SourceHierarchy] = {}
    for file in sorted(covered):
        try:
            source = (root / file).read_text(encoding="utf-8")
            hierarchies[file] = extract_hierarchy(file, source)
        except (OSError, SyntaxError) as exc:
            warnings.warn(
                f"cannot parse {file}, skipped: {exc}", CollectorWarning, stacklevel=2
            )
            del covered[file]

    project_has_classes = any(h.classes for h in hierarchies.values())

    elements: list[dict] = []
    statement_index: dict[tuple[str, int], int] = {}
    for file in sorted(covered):
        hierarchy = hierarchies[file]
        for unit in sorted(hierarchy.classes, key=lambda u: u.line):
            elements.append(
                {
                    "id": unit.id,
                    "kind": "class",
                    "file": file,
                    "line": unit.line,
                    "end_line": unit.end_line,
                    "display_name": unit.name,
                }
            )

        module_lines = sorted(
            line for line in covered[file] if hierarchy.method_for_line(line) is None
        )
        needs_module_method = bool(module_lines)
        loose_methods = needs_module_method or any(
            unit.parent_id is None for unit in hierarchy.methods
        )
        module_class_id = None
        if project_has_classes and loose_methods:
            module_class_id = f"{file}::<module-class>"
            elements.append(
                {
                    "id": module_class_id,
                    "kind": "class",
                    "file": file,
                    "line": 1,
                    "end_line": hierarchy.line_count,
                    "display_name": "<module>",
                }
            )

        for unit in sorted(hierarchy.methods, key=lambda u: u.line):
            entry = {
                "id": unit.id,
                "kind": "method",
                "file": file,
                "line": unit.line,
                "end_line": unit.end_line,
                "display_name": unit.name,
            }
            parent = unit.parent_id or module_class_id
            if parent is not None:
                entry["parent_id"] = parent
            elements.append(entry)

        module_method_id = f"{file}::<module>"
        if needs_module_method:
            entry = {
                "id": module_method_id,
                "kind": "method",
                "file": file,
                "line": 1,
                "end_line": hierarchy.line_count,
                "display_name": "<module>",
            }
            if module_class_id is not None:
                entry["parent_id"] = module_class_id
            elements.append(entry)

        for line in sorted(covered[file]):
            parent = hierarchy.method_for_line(line) or module_method_id
            statement_index[(file, line)] = len(elements)
            elements.append(_statement(file, line, parent))

    coverage = [
        sorted(
            statement_index[pair]
            for pair in lines_of_test[entry["id"]]
            if pair in statement_index
        )
        for entry in tests
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "tests": [{"id": t["id"], "outcome": t["outcome"]} for t in tests],
        "elements": elements,
        "coverage": coverage,
    }


def collect(config: CollectorConfig) -> dict:
    """Run the suite, build the document, and write it to the output path.

    Returns the document. Aborts without touching the output file when the
    run breaks or produces no usable tests.
    """
    trace_path = config.output_path.with_suffix(".trace.tmp")
    try:
        trace = run_traced_pytest(config, trace_path)
    finally:
        trace_path.unlink(missing_ok=True)
    document = build_document(config.project_root, trace)
    config.output_path.parent.mkdir(parents=True, exist_ok=True)
    config.output_path.write_text(
        json.dumps(document, indent=2) + "\n", encoding="utf-8", newline="\n"
    )
    return document
