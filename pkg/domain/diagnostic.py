"""Diagnostics and parse results"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Generic, Optional, TypeVar

from .node_id import NodeId
from .source_span import SourceSpan

T = TypeVar("T")


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """Entity: an error or warning tied to a source location"""
    severity: Severity
    message: str
    span: Optional[SourceSpan] = None
    matched_node: Optional[NodeId] = None

    def __post_init__(self):
        """Validates data"""
        if not isinstance(self.severity, Severity):
            raise ValueError(f"Unknown severity {self.severity!r}")

    @property
    def is_error(self) -> bool:
        return self.severity is Severity.ERROR

    def format(self) -> str:
        """`file:line:col: severity: message`"""
        location = str(self.span) if self.span else "<unknown>:1:1"
        return f"{location}: {self.severity.value}: {self.message}"


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(diagnostic.is_error for diagnostic in diagnostics)


@dataclass(frozen=True)
class ParseResult(Generic[T]):
    """Value plus diagnostics; an absent value always comes with an error"""
    value: Optional[T]
    diagnostics: tuple[Diagnostic, ...] = field(default_factory=tuple)

    def __post_init__(self):
        """Validates data"""
        if self.value is None and not has_errors(list(self.diagnostics)):
            raise ValueError("A failed result must carry an error diagnostic")

    @property
    def ok(self) -> bool:
        return self.value is not None and not has_errors(list(self.diagnostics))
