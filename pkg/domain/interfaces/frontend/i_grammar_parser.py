from abc import ABC, abstractmethod

from ...aspect import Aspect
from ...diagnostic import ParseResult
from ...grammar import Grammar
from ...patterns import Query
from ...template import TemplateLibrary
from ...values import AnnotationSet, Value


class IGrammarParser(ABC):
    """Reads the grammar, aspect and template concrete syntaxes"""
    @abstractmethod
    def parse_grammar(self, text: str, file_name: str) -> ParseResult[Grammar]:
        """Parses a `.grammar` file; imports stay unresolved"""
        pass

    @abstractmethod
    def parse_aspect(self, text: str, file_name: str) -> ParseResult[Aspect]:
        """Parses an `.aspect` file"""
        pass

    @abstractmethod
    def parse_templates(self, text: str, file_name: str) -> ParseResult[TemplateLibrary]:
        """Parses a `.templates` file"""
        pass

    @abstractmethod
    def parse_query(self, text: str, file_name: str) -> ParseResult[Query]:
        pass

    @abstractmethod
    def parse_attributes(self, text: str, file_name: str) -> ParseResult[AnnotationSet]:
        pass

    @abstractmethod
    def parse_value(self, text: str, file_name: str) -> ParseResult[Value]:
        pass
