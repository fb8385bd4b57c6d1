"""EBNF -> BNF rewriting with helper nonterminals"""
from typing import Optional

from domain import (
    Alternative,
    BnfAlternative,
    BnfGrammar,
    BnfRule,
    BnfTerm,
    CharClass,
    Diagnostic,
    Expression,
    Grammar,
    Iteration,
    IterationKind,
    Production,
    Sequence,
    Severity,
    StringLiteral,
    StringVal,
    SymbolRef,
    TokenDecl,
)
from infrastructure.localization import _
from infrastructure.parsing import GrammarPrinter
from infrastructure.parsing.escapes import quote_literal
from .symbol_classifier import SymbolClassification

LITERAL_TOKEN_NAMES = {
    "*": "STAR", "+": "PLUS", "-": "MINUS", "/": "SLASH",
    "(": "LPAREN", ")": "RPAREN", "[": "LBRACKET", "]": "RBRACKET",
    "{": "LBRACE", "}": "RBRACE", ",": "COMMA", ";": "SEMICOLON",
    ":": "COLON", ".": "DOT", "=": "EQUALS", "<": "LT", ">": "GT",
    "|": "PIPE", "&": "AMP", "!": "BANG", "?": "QUESTION", "%": "PERCENT",
    "^": "CARET", "~": "TILDE", "#": "HASH", "@": "AT", "$": "DOLLAR",
}

Alternatives = list[list[BnfTerm]]


class EbnfLowering:
    """
    Lowers the syntactic part of a flattened grammar to plain BNF.
    Iterations and inner alternatives become helpers `<Owner>_<n>`
    (left-recursive for `*` and `+`), nested groups are inlined, and
    literals and character classes become synthesized tokens.
    """

    def __init__(
        self,
        classification: SymbolClassification,
        action_attribute: str = "action",
        start_attribute: str = "start",
        printer: Optional[GrammarPrinter] = None,
    ):
        self.classification = classification
        self.action_attribute = action_attribute
        self.start_attribute = start_attribute
        self.printer = printer or GrammarPrinter()

    def _reset(self, grammar: Grammar) -> None:
        self._taken: set[str] = {symbol.name for symbol in grammar.symbols}
        self._externals: list[str] = []
        for symbol in grammar.symbols:
            if symbol.name not in self.classification.syntactic:
                continue
            for production in symbol.productions:
                for node in production.body.walk():
                    if not isinstance(node, SymbolRef):
                        continue
                    if node.name not in self._taken and node.name not in self._externals:
                        self._externals.append(node.name)
        self._taken.update(self._externals)
        self._synthesized: list[TokenDecl] = []
        self._literal_tokens: dict[str, str] = {}
        self._class_tokens: dict[tuple, str] = {}
        self._helpers: list[BnfRule] = []
        self._helper_index: dict[str, int] = {}
        self._helper_counters: dict[str, int] = {}

    def _fresh(self, base: str) -> str:
        name, counter = base, 2
        while name in self._taken:
            name, counter = f"{base}_{counter}", counter + 1
        self._taken.add(name)
        return name

    def _helper_name(self, owner: str) -> str:
        counter = self._helper_counters.get(owner, 0)
        while True:
            counter += 1
            name = f"{owner}_{counter}"
            if name not in self._taken:
                break
        self._helper_counters[owner] = counter
        self._taken.add(name)
        self._helper_index[name] = len(self._helper_index)
        return name

    # ---- tokens

    def _literal_token(self, literal: StringLiteral) -> BnfTerm:
        name = self._literal_tokens.get(literal.text)
        if name is None:
            base = LITERAL_TOKEN_NAMES.get(literal.text) or "LIT_" + literal.text.encode("utf-8").hex().upper()
            name = self._fresh(base)
            self._literal_tokens[literal.text] = name
            self._synthesized.append(TokenDecl(name, quote_literal(literal.text)))
        return BnfTerm(name, is_token=True)

    def _class_token(self, char_class: CharClass) -> BnfTerm:
        name = self._class_tokens.get(char_class.ranges)
        if name is None:
            name = self._fresh(f"CLASS_{len(self._class_tokens) + 1}")
            self._class_tokens[char_class.ranges] = name
            self._synthesized.append(TokenDecl(name, self.printer.print_expression(char_class)))
        return BnfTerm(name, is_token=True)

    def _reference(self, ref: SymbolRef) -> BnfTerm:
        if ref.name in self.classification.syntactic:
            return BnfTerm(ref.name)
        return BnfTerm(ref.name, is_token=True)

    # ---- expressions

    # A parenthesised group gets no helper of its own: a sequence is spliced into
    # the enclosing terms and a production's top-level alternatives become
    # alternatives of the owner rule. Only inner alternatives and iterations
    # are named.
    def _alternatives(self, owner: str, expression: Expression) -> Alternatives:
        if isinstance(expression, Alternative):
            result: Alternatives = []
            for option in expression.options:
                result.extend(self._alternatives(owner, option))
            return result
        return [self._terms(owner, expression)]

    def _terms(self, owner: str, expression: Expression) -> list[BnfTerm]:
        if isinstance(expression, Sequence):
            terms: list[BnfTerm] = []
            for term in expression.terms:
                terms.extend(self._terms(owner, term))
            return terms
        if isinstance(expression, SymbolRef):
            return [self._reference(expression)]
        if isinstance(expression, StringLiteral):
            return [self._literal_token(expression)]
        if isinstance(expression, CharClass):
            return [self._class_token(expression)]
        if isinstance(expression, Alternative):
            helper = self._helper_name(owner)
            self._add_helper(helper, self._alternatives(owner, expression))
            return [BnfTerm(helper)]
        if isinstance(expression, Iteration):
            helper = self._helper_name(owner)
            inner = self._alternatives(owner, expression.inner)
            recursive = [[BnfTerm(helper)] + alternative for alternative in inner]
            if expression.kind is IterationKind.STAR:
                alternatives = [[]] + recursive
            elif expression.kind is IterationKind.PLUS:
                alternatives = inner + recursive
            else:
                alternatives = [[]] + inner
            self._add_helper(helper, alternatives)
            return [BnfTerm(helper)]
        raise TypeError(f"Cannot lower {type(expression).__name__}")

    def _add_helper(self, name: str, alternatives: Alternatives) -> None:
        rule = BnfRule(name, tuple(BnfAlternative(tuple(terms)) for terms in alternatives))
        # helpers are emitted in the order they were named
        self._helpers.append(rule)
        self._helpers.sort(key=lambda helper: self._helper_index[helper.head])

    def _action(self, production: Production, diagnostics: list[Diagnostic]) -> Optional[str]:
        attribute = production.annotations.get(self.action_attribute)
        if attribute is None:
            return None
        if isinstance(attribute.value, StringVal):
            return attribute.value.text
        diagnostics.append(Diagnostic(
            Severity.ERROR, _("yacc_action_not_string", name=self.action_attribute), production.span,
            matched_node=production.id,
        ))
        return None

    def _start_symbol(self, grammar: Grammar, diagnostics: list[Diagnostic]) -> Optional[str]:
        syntactic = [symbol for symbol in grammar.symbols if symbol.name in self.classification.syntactic]
        if not syntactic:
            diagnostics.append(Diagnostic(Severity.ERROR, _("yacc_no_start_symbol"), grammar.span))
            return None
        marked = [symbol for symbol in syntactic if self.start_attribute in symbol.annotations]
        return (marked or syntactic)[0].name

    def lower(self, grammar: Grammar) -> tuple[Optional[BnfGrammar], list[Diagnostic]]:
        self._reset(grammar)
        diagnostics: list[Diagnostic] = []
        start = self._start_symbol(grammar, diagnostics)

        rules: list[BnfRule] = []
        for symbol in grammar.symbols:
            if symbol.name not in self.classification.syntactic:
                continue
            self._helpers = []
            alternatives: list[BnfAlternative] = []
            for production in symbol.productions:
                action = self._action(production, diagnostics)
                for terms in self._alternatives(symbol.name, production.body):
                    alternatives.append(BnfAlternative(tuple(terms), action))
            rules.append(BnfRule(symbol.name, tuple(alternatives)))
            rules.extend(self._helpers)

        if any(diagnostic.is_error for diagnostic in diagnostics):
            return None, diagnostics
        tokens = [self._lexical_token(symbol) for symbol in grammar.symbols if symbol.name in self.classification.lexical]
        tokens += [TokenDecl(name, "") for name in self._externals]
        tokens += self._synthesized
        return BnfGrammar(tuple(tokens), tuple(rules), start), diagnostics

    def _lexical_token(self, symbol) -> TokenDecl:
        definition = " || ".join(self.printer.print_expression(p.body) for p in symbol.productions)
        return TokenDecl(symbol.name, definition)
