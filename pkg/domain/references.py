"""Reference validation pass over a grammar"""
from dataclasses import dataclass
from typing import Callable, Optional

from .diagnostic import Diagnostic, Severity
from .errors import AmbiguousReferenceError
from .expressions import SymbolRef
from .grammar import Grammar, iter_symbol_refs

# (message key, details) -> message text
Translate = Callable[..., str]


@dataclass(frozen=True)
class ReferenceProblem:
    """A symbol reference that resolves to nothing, or to several namespaces"""
    ref: SymbolRef
    scope: Optional[str]
    ambiguous_in: tuple[str, ...] = ()

    @property
    def is_ambiguous(self) -> bool:
        return bool(self.ambiguous_in)

    def to_diagnostic(self, translate: Translate, allow_undefined: bool = False) -> Diagnostic:
        """Ambiguity is always an error; an undefined name is a warning when `allow_undefined`"""
        if self.is_ambiguous:
            message = translate("parse_ambiguous_symbol", name=self.ref.name, namespaces=", ".join(self.ambiguous_in))
            return Diagnostic(Severity.ERROR, message, self.ref.span)
        severity = Severity.WARNING if allow_undefined else Severity.ERROR
        return Diagnostic(severity, translate("parse_undefined_symbol", name=self.ref.name), self.ref.span)


def find_reference_problems(grammar: Grammar) -> list[ReferenceProblem]:
    problems: list[ReferenceProblem] = []
    for scope, symbol in grammar.scoped_symbols():
        for production in symbol.productions:
            for ref in iter_symbol_refs(production.body):
                try:
                    resolved = grammar.resolve_symbol(ref.name, scope)
                except AmbiguousReferenceError as error:
                    problems.append(ReferenceProblem(ref, scope, tuple(error.aliases)))
                    continue
                if resolved is None:
                    problems.append(ReferenceProblem(ref, scope))
    return problems


def reference_diagnostics(grammar: Grammar, translate: Translate, allow_undefined: bool = False) -> list[Diagnostic]:
    return [problem.to_diagnostic(translate, allow_undefined) for problem in find_reference_problems(grammar)]
