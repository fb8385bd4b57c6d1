from abc import ABC, abstractmethod

from ...grammar import Grammar
from ...values import AnnotationSet, Value


class IGrammarPrinter(ABC):
    """Canonical text for grammars and metadata values"""
    @abstractmethod
    def print_grammar(self, grammar: Grammar) -> str:
        """Grammar concrete syntax without annotations"""
        pass

    @abstractmethod
    def format_value(self, value: Value) -> str:
        pass

    @abstractmethod
    def format_annotations(self, annotations: AnnotationSet) -> str:
        """`{ name; name = value; }`"""
        pass
