from dataclasses import dataclass, field
from typing import Optional

from .diagnostic import Diagnostic, has_errors


@dataclass(frozen=True)
class ExportResult:
    """Entity: backend output text plus the diagnostics raised producing it"""
    text: Optional[str]
    diagnostics: tuple[Diagnostic, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.text is not None and not has_errors(list(self.diagnostics))
