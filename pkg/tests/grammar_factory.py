"""Fixture files and seeded random grammars for the property suites"""
import random
from pathlib import Path
from typing import Optional

from domain import (
    Alternative,
    AnnotationSet,
    Attribute,
    CapturePattern,
    CharClass,
    Expression,
    Grammar,
    IdentifierVal,
    IntVal,
    Iteration,
    IterationKind,
    IterationPattern,
    LiteralPattern,
    MetaPattern,
    Absent,
    AlternativePattern,
    Equals,
    HasType,
    PatternExpr,
    Present,
    Punctuation,
    Production,
    ProductionPattern,
    Query,
    RulePattern,
    Sequence,
    SequencePattern,
    SequenceVal,
    StringLiteral,
    StringVal,
    Symbol,
    SymbolRef,
    ValueKind,
    VariablePattern,
    WildcardCapturePattern,
    WildcardPattern,
)

FIXTURES = Path(__file__).parent / "fixtures"

ROUND_TRIP_NAMES = ("A", "B", "Expr", "Term", "x_1", "Item", "Z9", "Op")
ROUND_TRIP_LITERALS = ("a", "b", "+", "'", "\\", "->")
CLASS_RANGES = (("0", "9"), ("a", "f"), ("x", "x"), ("'", "'"))
KINDS = tuple(IterationKind)


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


class GrammarFactory:
    """
    Random grammars built directly from domain objects.
    Every reference points at a defined symbol.
    """

    def __init__(
        self,
        seed: int,
        names: tuple[str, ...] = ROUND_TRIP_NAMES,
        literals: tuple[str, ...] = ROUND_TRIP_LITERALS,
        max_symbols: int = 8,
        max_depth: int = 4,
    ):
        self.rng = random.Random(seed)
        self.names = names
        self.literals = literals
        self.max_symbols = max_symbols
        self.max_depth = max_depth

    def grammar(self) -> Grammar:
        count = self.rng.randint(1, min(self.max_symbols, len(self.names)))
        names = self.rng.sample(self.names, count)
        symbols = []
        for name in names:
            productions = tuple(
                Production(self.expression(names, self.max_depth))
                for _ in range(self.rng.randint(1, 3))
            )
            symbols.append(Symbol(name, productions))
        return Grammar(tuple(symbols))

    def expression(self, names: list[str], depth: int) -> Expression:
        if depth <= 1 or self.rng.random() < 0.35:
            return self.leaf(names)
        choice = self.rng.random()
        if choice < 0.4:
            return Sequence(tuple(self.expression(names, depth - 1) for _ in range(self.rng.randint(2, 3))))
        if choice < 0.7:
            return Alternative(tuple(self.expression(names, depth - 1) for _ in range(self.rng.randint(2, 3))))
        return Iteration(self.expression(names, depth - 1), self.rng.choice(KINDS))

    def leaf(self, names: list[str]) -> Expression:
        choice = self.rng.random()
        if choice < 0.5:
            return SymbolRef(self.rng.choice(names))
        if choice < 0.8:
            return StringLiteral(self.rng.choice(self.literals))
        ranges = tuple(self.rng.sample(CLASS_RANGES, self.rng.randint(1, 2)))
        return CharClass(ranges)


class OracleCaseFactory:
    """
    Small grammars and queries for the brute-force oracle.
    Rule patterns have one or two productions of flat atoms, captures may wrap
    an alternative, and meta patterns test flags, values and value types.
    Queries stay within 4 body variables and 2 wildcards per production.
    """

    NAMES = tuple(f"S{index}x" for index in range(8))
    LITERALS = ("x", "y")
    BODY_VARS = ("H", "X", "Y", "Z")
    FLAG = "hot"
    KIND = "kind"
    KIND_VALUES = (IdentifierVal("Binary"), IdentifierVal("Unary"), StringVal("Binary"))

    def __init__(self, seed: int):
        self.rng = random.Random(seed)
        self.captures = 0

    def grammar(self) -> Grammar:
        count = self.rng.randint(1, len(self.NAMES))
        names = list(self.NAMES[:count])
        symbols = []
        for name in names:
            productions = tuple(Production(self._body(names)) for _ in range(self.rng.randint(1, 3)))
            symbols.append(Symbol(name, productions, self._annotations()))
        return Grammar(tuple(symbols))

    def _annotations(self) -> AnnotationSet:
        attributes = []
        if self.rng.random() < 0.3:
            attributes.append(Attribute(self.FLAG))
        if self.rng.random() < 0.5:
            attributes.append(Attribute(self.KIND, self.rng.choice(self.KIND_VALUES)))
        return AnnotationSet(tuple(attributes))

    def _body(self, names: list[str]) -> Expression:
        if self.rng.random() < 0.3:
            return self._term(names)
        return Sequence(tuple(self._term(names) for _ in range(self.rng.randint(2, 4))))

    def _term(self, names: list[str]) -> Expression:
        choice = self.rng.random()
        if choice < 0.5:
            return SymbolRef(self.rng.choice(names))
        if choice < 0.7:
            return StringLiteral(self.rng.choice(self.LITERALS))
        if choice < 0.85:
            return Alternative(tuple(self._option(names) for _ in range(2)))
        return Iteration(SymbolRef(self.rng.choice(names)), self.rng.choice(KINDS))

    def _option(self, names: list[str]) -> Expression:
        if self.rng.random() < 0.7:
            return SymbolRef(self.rng.choice(names))
        return StringLiteral(self.rng.choice(self.LITERALS))

    def query(self) -> Query:
        variables = {"H"}
        productions = [self._production_pattern(variables) for _ in range(1 if self.rng.random() < 0.7 else 2)]

        metas: list[MetaPattern] = []
        if self.rng.random() < 0.3:
            metas.append(MetaPattern("H", (Present(self.FLAG),)))
        if self.rng.random() < 0.25:
            metas.append(MetaPattern("H", (Equals(self.KIND, IdentifierVal("Binary")),)))
        if self.rng.random() < 0.15:
            metas.append(MetaPattern("H", (HasType(self.KIND, ValueKind.STRING),)))
        if self.rng.random() < 0.2 and len(variables) < 4:
            metas.append(MetaPattern("M", (Absent(self.FLAG),)))
        return Query(RulePattern("H", tuple(productions)), tuple(metas))

    def _production_pattern(self, variables: set[str]) -> ProductionPattern:
        wildcards = 0
        atoms: list[PatternExpr] = []
        for _ in range(self.rng.randint(2, 4)):
            atom = self._atom(variables, wildcards)
            if isinstance(atom, (WildcardPattern, WildcardCapturePattern)):
                wildcards += 1
            if isinstance(atom, (WildcardCapturePattern, CapturePattern)):
                self.captures += 1
            for node in atom.walk():
                name = getattr(node, "name", None)
                if name is not None:
                    variables.add(name)
            atoms.append(atom)
        return ProductionPattern(SequencePattern(tuple(atoms)))

    def _atom(self, variables: set[str], wildcards: int) -> PatternExpr:
        while True:
            choice = self.rng.random()
            if choice < 0.35:
                var = self._variable(variables)
                if var is not None:
                    return VariablePattern(var)
            elif choice < 0.5:
                return LiteralPattern(self.rng.choice(self.LITERALS))
            elif choice < 0.65:
                if wildcards < 2:
                    return WildcardPattern()
            elif choice < 0.72:
                name = f"W{self.captures}"
                if wildcards < 2 and len(variables) < 4:
                    return WildcardCapturePattern(name)
            elif choice < 0.8:
                var = self._variable(variables)
                if var is not None:
                    return IterationPattern(VariablePattern(var), self.rng.choice(KINDS))
            elif choice < 0.88:
                name = f"C{self.captures}"
                var = self._variable(variables | {name})
                if var is not None and len(variables | {name, var}) <= 4:
                    return CapturePattern(name, VariablePattern(var))
            else:
                name = f"C{self.captures}"
                options = (self._option_pattern(variables), self._option_pattern(variables))
                used = {option.name for option in options if isinstance(option, VariablePattern)}
                if len(variables | used | {name}) <= 5:
                    return CapturePattern(name, AlternativePattern(options))

    def _option_pattern(self, variables: set[str]) -> PatternExpr:
        var = self._variable(variables) if self.rng.random() < 0.7 else None
        return VariablePattern(var) if var is not None else LiteralPattern(self.rng.choice(self.LITERALS))

    def _variable(self, variables: set[str]) -> Optional[str]:
        candidates = [name for name in self.BODY_VARS if name in variables or len(variables) < 4]
        return self.rng.choice(candidates) if candidates else None


class SequenceValueFactory:
    """Random `{{ ... }}` values, nested up to `max_depth` levels"""

    IDENTIFIERS = ("a", "b_1", "Name", "error", "on", "nomatch")
    STRINGS = ("", "s", 'q"uote', "back\\slash", "two\nlines")
    PUNCTUATION = (";", ",", "(", ")", "+", "-", "*", ".", ":", "=", "^", "'", "{", "}", "|", "!")

    def __init__(self, seed: int, max_depth: int = 3):
        self.rng = random.Random(seed)
        self.max_depth = max_depth

    def value(self, depth: Optional[int] = None) -> SequenceVal:
        depth = self.max_depth if depth is None else depth
        return SequenceVal(tuple(self._token(depth) for _ in range(self.rng.randint(0, 4))))

    def _token(self, depth: int):
        choice = self.rng.random()
        if choice < 0.25 and depth > 1:
            return self.value(depth - 1)
        if choice < 0.5:
            return Punctuation(self.rng.choice(self.PUNCTUATION))
        if choice < 0.7:
            return IdentifierVal(self.rng.choice(self.IDENTIFIERS))
        if choice < 0.85:
            return StringVal(self.rng.choice(self.STRINGS))
        return IntVal(self.rng.randint(-20, 20))
