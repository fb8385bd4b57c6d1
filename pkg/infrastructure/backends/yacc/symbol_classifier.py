"""Lexical / syntactic split of grammar symbols"""
import re
from dataclasses import dataclass

from domain import Diagnostic, Grammar, Severity, SymbolRef
from infrastructure.localization import _

_TOKEN_NAME_RE = re.compile(r"[A-Z0-9_]*[A-Z][A-Z0-9_]*")


@dataclass(frozen=True)
class SymbolClassification:
    lexical: tuple[str, ...]
    syntactic: tuple[str, ...]


class SymbolClassifier:
    """
    A symbol is lexical when it carries the `lexical` flag or, failing that,
    when its name is written in capitals (INT, REAL, ID_2).
    """

    def __init__(self, lexical_attribute: str = "lexical"):
        self.lexical_attribute = lexical_attribute

    def is_lexical(self, symbol) -> bool:
        return self.lexical_attribute in symbol.annotations or _TOKEN_NAME_RE.fullmatch(symbol.name) is not None

    def classify(self, grammar: Grammar) -> tuple[SymbolClassification, list[Diagnostic]]:
        lexical = tuple(symbol.name for symbol in grammar.symbols if self.is_lexical(symbol))
        syntactic = tuple(symbol.name for symbol in grammar.symbols if symbol.name not in lexical)
        diagnostics: list[Diagnostic] = []
        for symbol in grammar.symbols:
            if symbol.name not in lexical:
                continue
            for production in symbol.productions:
                for node in production.body.walk():
                    if isinstance(node, SymbolRef) and node.name in syntactic:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR,
                            _("yacc_lexical_uses_syntactic", lexical=symbol.name, syntactic=node.name),
                            node.span,
                            matched_node=node.id,
                        ))
        return SymbolClassification(lexical, syntactic), diagnostics
