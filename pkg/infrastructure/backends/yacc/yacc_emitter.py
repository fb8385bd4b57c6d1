"""Yacc input file text"""
from domain import BnfAlternative, BnfGrammar


class YaccEmitter:
    """Declarations, `%%`, one block per nonterminal, closing `%%`"""

    INDENT = "    "

    def __init__(self, epsilon_comment: str = "/* empty */"):
        self.epsilon_comment = epsilon_comment

    def emit(self, bnf: BnfGrammar) -> str:
        lines: list[str] = []
        for token in bnf.tokens:
            if token.lexeme:
                lexeme = token.lexeme.replace("*/", "* /")
                lines.append(f"%token {token.name} /* {lexeme} */")
            else:
                lines.append(f"%token {token.name}")
        if bnf.start_symbol:
            lines.append(f"%start {bnf.start_symbol}")
        lines.extend(["", "%%", ""])
        for rule in bnf.rules:
            lines.append(rule.head)
            for index, alternative in enumerate(rule.alternatives):
                marker = ":" if index == 0 else "|"
                lines.append(f"{self.INDENT}{marker} {self._alternative(alternative)}")
            lines.append(f"{self.INDENT};")
            lines.append("")
        lines.append("%%")
        return "\n".join(lines) + "\n"

    def _alternative(self, alternative: BnfAlternative) -> str:
        body = " ".join(term.name for term in alternative.terms) or self.epsilon_comment
        if alternative.action is not None:
            body += " { " + alternative.action + " }"
        return body
