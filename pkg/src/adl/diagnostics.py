"""Source positions and diagnostics shared by every compiler stage.

Diagnostic codes form a closed set (see ``docs/diagnostics.md``); tests
assert that no stage invents a code outside :data:`KNOWN_CODES`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


@dataclass(frozen=True)
class SourcePos:
    """1-based position of a construct in one source file."""

    file: str
    line: int
    column: int

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError("line and column are 1-based")

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


# The documented closed set of diagnostic codes.
KNOWN_CODES = frozenset(
    {
        # lexer
        "illegal-char",
        "unterminated-string",
        "unterminated-comment",
        "bad-number",
        # parser
        "syntax",
        "unsupported-construct",
        "sequence-depth",
        "conflicting-category",
        "duplicate-modifier",
        # metamodel
        "duplicate-def",
        "unknown-type",
        "ambiguous-name",
        "inherit-cycle",
        "typedef-cycle",
        "embed-cycle",
        "category-conflict",
        "bad-base",
        "framework-value-type",
        "duplicate-member",
        "relationship-category",
        "bad-inverse",
        "classid-collision",
        # backends
        "empty-payload",
    }
)


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    pos: SourcePos

    def __post_init__(self) -> None:
        if self.code not in KNOWN_CODES:
            raise ValueError(f"unknown diagnostic code: {self.code}")

    def render(self) -> str:
        """One line in the conventional ``file:line:col: severity[code]: message`` shape."""
        return f"{self.pos}: {self.severity.value}[{self.code}]: {self.message}"


def error(code: str, message: str, pos: SourcePos) -> Diagnostic:
    return Diagnostic(Severity.ERROR, code, message, pos)


def warning(code: str, message: str, pos: SourcePos) -> Diagnostic:
    return Diagnostic(Severity.WARNING, code, message, pos)


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity is Severity.ERROR for d in diagnostics)


def sort_key(diag: Diagnostic) -> tuple:
    return (diag.pos.file, diag.pos.line, diag.pos.column, diag.code)
