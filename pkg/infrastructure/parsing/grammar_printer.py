"""Canonical text form of grammars and metadata values"""
from domain import (
    Alternative,
    AnnotationSet,
    AnnotationVal,
    Argument,
    CharClass,
    Expression,
    Grammar,
    IdentifierVal,
    IGrammarPrinter,
    ImportDecl,
    IntVal,
    Iteration,
    Placeholder,
    Punctuation,
    Sequence,
    SequenceVal,
    StringLiteral,
    StringVal,
    Symbol,
    SymbolRef,
    Value,
)
from .escapes import quote_literal, quote_string

# contexts an expression can be printed in, loosest first
_TOP, _ALTERNATIVE, _SEQUENCE, _POSTFIX = range(4)


class GrammarPrinter(IGrammarPrinter):
    """
    Prints grammars in the concrete syntax accepted by LarkGrammarParser.
    Namespaces are not printed; flatten a grammar before printing it.
    """

    INDENT = "    "

    def print_grammar(self, grammar: Grammar) -> str:
        blocks = [self.print_import(decl) for decl in grammar.imports]
        if blocks and grammar.symbols:
            blocks.append("")
        rules = [self.print_symbol(symbol) for symbol in grammar.symbols]
        text = "\n".join(blocks) + ("\n" if blocks else "")
        text += "\n\n".join(rules)
        return text + "\n" if text else ""

    def print_import(self, decl: ImportDecl) -> str:
        args = ", ".join(self._argument(arg) for arg in decl.args)
        alias = f"{decl.alias} = " if decl.alias else ""
        return f"import {alias}{decl.template_name}<{args}>;"

    def _argument(self, argument: Argument) -> str:
        if not argument.productions:
            return "empty"
        return " || ".join(self.print_expression(body) for body in argument.productions)

    def print_symbol(self, symbol: Symbol) -> str:
        bodies = [self.print_expression(production.body) for production in symbol.productions]
        if len(bodies) == 1:
            return f"{symbol.name} -> {bodies[0]} ;"
        lines = [symbol.name, f"{self.INDENT}-> {bodies[0]}"]
        lines.extend(f"{self.INDENT}|| {body}" for body in bodies[1:])
        lines.append(f"{self.INDENT};")
        return "\n".join(lines)

    def print_expression(self, expression: Expression, context: int = _TOP) -> str:
        if isinstance(expression, Alternative):
            text = " | ".join(self.print_expression(o, _ALTERNATIVE) for o in expression.options)
            return f"({text})" if context >= _ALTERNATIVE else text
        if isinstance(expression, Sequence):
            text = " ".join(self.print_expression(t, _SEQUENCE) for t in expression.terms)
            return f"({text})" if context >= _SEQUENCE else text
        if isinstance(expression, Iteration):
            text = self.print_expression(expression.inner, _POSTFIX) + expression.kind.value
            return f"({text})" if context >= _POSTFIX else text
        if isinstance(expression, SymbolRef):
            return expression.name
        if isinstance(expression, StringLiteral):
            return quote_literal(expression.text)
        if isinstance(expression, CharClass):
            items = [
                quote_literal(lo) if lo == hi else f"{quote_literal(lo)}--{quote_literal(hi)}"
                for lo, hi in expression.ranges
            ]
            return "[" + " ".join(items) + "]"
        if isinstance(expression, Placeholder):
            return f"${expression.name}"
        raise TypeError(f"Cannot print {type(expression).__name__}")

    # ---- metadata

    def format_annotations(self, annotations: AnnotationSet) -> str:
        """`{ a; b = v; }`, `{ }` when empty"""
        if not len(annotations):
            return "{ }"
        parts = [
            f"{attribute.name};" if attribute.is_flag else f"{attribute.name} = {self.format_value(attribute.value)};"
            for attribute in annotations
        ]
        return "{ " + " ".join(parts) + " }"

    def format_value(self, value: Value) -> str:
        if isinstance(value, IdentifierVal):
            return value.name
        if isinstance(value, StringVal):
            return quote_string(value.text)
        if isinstance(value, IntVal):
            return str(value.value)
        if isinstance(value, AnnotationVal):
            return self.format_annotations(value.annotations)
        if isinstance(value, SequenceVal):
            tokens = [token.char if isinstance(token, Punctuation) else self.format_value(token) for token in value.tokens]
            return "{{ " + " ".join(tokens) + " }}" if tokens else "{{ }}"
        raise TypeError(f"Cannot format {type(value).__name__}")
