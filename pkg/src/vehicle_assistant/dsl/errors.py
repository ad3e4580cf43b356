"""Errors raised while parsing and validating domain documents."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceLocation:
    """Position of a construct inside a document set (1-based line/column)."""

    file: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class DomainError(Exception):
    """Base class for all domain document errors."""


class DomainSyntaxError(DomainError):
    """Malformed document text. Carries the offending position."""

    def __init__(self, message: str, location: SourceLocation):
        super().__init__(f"{location}: {message}")
        self.message = message
        self.location = location

    @property
    def line(self) -> int:
        return self.location.line

    @property
    def column(self) -> int:
        return self.location.column


class ValidationError(DomainError):
    """Well-formed document that violates a domain rule.

    ``kind`` is a stable machine-readable code (e.g. ``dangling_action``),
    ``name`` the offending identifier, ``location`` where it was found.
    """

    def __init__(self, kind: str, name: str, message: str, location: SourceLocation | None = None):
        where = f" ({location})" if location else ""
        super().__init__(f"{kind}: {message}{where}")
        self.kind = kind
        self.name = name
        self.message = message
        self.location = location
