"""Plain BNF grammar produced by EBNF lowering"""
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class TokenDecl:
    """A terminal: literal text, a character class or a lexical symbol's definition"""
    name: str
    lexeme: str


@dataclass(frozen=True)
class BnfTerm:
    name: str
    is_token: bool = False


@dataclass(frozen=True)
class BnfAlternative:
    """Terms of one alternative; empty terms is epsilon"""
    terms: tuple[BnfTerm, ...] = ()
    action: Optional[str] = None


@dataclass(frozen=True)
class BnfRule:
    head: str
    alternatives: tuple[BnfAlternative, ...]


@dataclass(frozen=True)
class BnfGrammar:
    tokens: tuple[TokenDecl, ...] = ()
    rules: tuple[BnfRule, ...] = ()
    start_symbol: Optional[str] = None

    def __post_init__(self):
        """Validates data"""
        names = [token.name for token in self.tokens]
        if len(names) != len(set(names)):
            raise ValueError("Token names must be unique")

    def rule(self, head: str) -> Optional[BnfRule]:
        return next((rule for rule in self.rules if rule.head == head), None)
