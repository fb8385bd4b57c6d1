from abc import ABC, abstractmethod

from ...export_result import ExportResult
from ...grammar import Grammar


class IGrammarBackend(ABC):
    """Transforms an annotated grammar into another tool's input format"""
    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def file_suffix(self) -> str:
        pass

    @abstractmethod
    def export(self, grammar: Grammar) -> ExportResult:
        """Grammar must be resolved and flattened"""
        pass
