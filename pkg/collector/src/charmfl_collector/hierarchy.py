"""Class/method skeleton extraction from Python source.

Walks the AST and records every class and every function (methods, nested
functions, async variants). A function's parent is its nearest enclosing
class, so the parent chain of a nested function still reaches the class; a
statement maps to the innermost function whose body spans it. A def line
itself executes in the enclosing scope and therefore maps outside the
function it introduces, which keeps method coverage a pure OR over body
statements.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field


@dataclass(frozen=True)
class CodeUnit:
    """One extracted class or function."""

    id: str
    kind: str  # "class" | "method"
    name: str
    line: int
    end_line: int
    parent_id: str | None = None
    body_start: int | None = None  # functions only: first body statement line


@dataclass
class SourceHierarchy:
    """Skeleton of one source file plus the line-to-function mapping."""

    file: str
    line_count: int
    classes: list[CodeUnit] = field(default_factory=list)
    methods: list[CodeUnit] = field(default_factory=list)
    _intervals: list[tuple[int, int, str]] = field(default_factory=list)

    def method_for_line(self, line: int) -> str | None:
        """Id of the innermost function whose body contains `line`."""
        best: tuple[int, int, str] | None = None
        for start, end, unit_id in self._intervals:
            if start <= line <= end and (best is None or start > best[0]):
                best = (start, end, unit_id)
        return best[2] if best else None


def _unit_id(file: str, dotted: str, line: int) -> str:
    return f"{file}::{dotted}:{line}"


class _Extractor(ast.NodeVisitor):
    def __init__(self, file: str) -> None:
        self.file = file
        self.classes: list[CodeUnit] = []
        self.methods: list[CodeUnit] = []
        self._class_stack: list[CodeUnit] = []
        self._path: list[str] = []

    def _span(self, node: ast.AST) -> tuple[int, int]:
        return node.lineno, node.end_lineno or node.lineno

    def visit_ClassDef(self, node: ast.ClassDef) -> None:
        line, end = self._span(node)
        unit = CodeUnit(
            id=_unit_id(self.file, ".".join(self._path + [node.name]), line),
            kind="class",
            name=node.name,
            line=line,
            end_line=end,
        )
        self.classes.append(unit)
        self._class_stack.append(unit)
        self._path.append(node.name)
        self.generic_visit(node)
        self._path.pop()
        self._class_stack.pop()

    def _visit_function(self, node: ast.FunctionDef | ast.AsyncFunctionDef) -> None:
        line, end = self._span(node)
        parent = self._class_stack[-1] if self._class_stack else None
        unit = CodeUnit(
            id=_unit_id(self.file, ".".join(self._path + [node.name]), line),
            kind="method",
            name=node.name,
            line=line,
            end_line=end,
            parent_id=parent.id if parent else None,
            body_start=node.body[0].lineno,
        )
        self.methods.append(unit)
        self._path.append(node.name)
        self.generic_visit(node)
        self._path.pop()

    visit_FunctionDef = _visit_function
    visit_AsyncFunctionDef = _visit_function


def extract_hierarchy(file: str, source: str) -> SourceHierarchy:
    """Parse `source` (known as `file` in the project) into a skeleton.

    Raises SyntaxError for unparseable input; callers skip the file and
    keep collecting.
    """
    tree = ast.parse(source, filename=file)
    extractor = _Extractor(file)
    extractor.visit(tree)
    hierarchy = SourceHierarchy(
        file=file,
        line_count=max(1, source.count("\n") + (0 if source.endswith("\n") else 1)),
        classes=extractor.classes,
        methods=extractor.methods,
    )
    for unit in extractor.methods:
        hierarchy._intervals.append((unit.body_start or unit.line, unit.end_line, unit.id))
    return hierarchy
