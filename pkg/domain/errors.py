"""Domain exceptions"""
from typing import Optional

from .source_span import SourceSpan


class GrammarError(Exception):
    """Base class for grammar model failures"""


class UnknownNodeError(GrammarError, KeyError):
    """Raised when a NodeId does not belong to the grammar"""

    def __init__(self, node_id: int):
        super().__init__(f"Node {node_id} does not exist in this grammar")
        self.node_id = node_id

    def __str__(self) -> str:
        return self.args[0]


class AmbiguousReferenceError(GrammarError, LookupError):
    """Unqualified name exported by more than one namespace"""

    def __init__(self, name: str, aliases: list[str]):
        super().__init__(f"'{name}' is exported by namespaces {', '.join(aliases)}")
        self.name = name
        self.aliases = aliases


class TemplateError(GrammarError):
    """Template instantiation failure (arity, kind or name clash)"""

    def __init__(self, key: str, **details):
        super().__init__(key)
        self.key = key
        self.details = details


class FrontendError(GrammarError):
    """Problem found while building an AST from parsed text"""

    def __init__(self, key: str, span: Optional[SourceSpan], **details):
        super().__init__(key)
        self.key = key
        self.span = span
        self.details = details
