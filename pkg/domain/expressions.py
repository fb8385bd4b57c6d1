"""Expression nodes of production bodies (EBNF syntax tree)"""
import re
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterator, Optional

from .node_id import NodeId, new_node_id
from .source_span import SourceSpan
from .values import AnnotationSet

QUALIFIED_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(\.[A-Za-z_][A-Za-z0-9_]*)?")


class IterationKind(str, Enum):
    STAR = "*"
    PLUS = "+"
    OPTION = "?"


@dataclass(frozen=True, kw_only=True)
class Expression:
    """Base of every expression node; spans and ids take no part in equality"""
    annotations: AnnotationSet = field(default_factory=AnnotationSet)
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)
    id: NodeId = field(default_factory=new_node_id, compare=False)

    def children(self) -> tuple["Expression", ...]:
        return ()

    def walk(self) -> Iterator["Expression"]:
        """Pre-order traversal of this node and its descendants"""
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass(frozen=True)
class Sequence(Expression):
    terms: tuple[Expression, ...]

    def __post_init__(self):
        if len(self.terms) < 2:
            raise ValueError("A sequence needs at least two terms")

    def children(self) -> tuple[Expression, ...]:
        return self.terms


@dataclass(frozen=True)
class Alternative(Expression):
    options: tuple[Expression, ...]

    def __post_init__(self):
        if len(self.options) < 2:
            raise ValueError("An alternative needs at least two options")

    def children(self) -> tuple[Expression, ...]:
        return self.options


@dataclass(frozen=True)
class Iteration(Expression):
    inner: Expression
    kind: IterationKind

    def children(self) -> tuple[Expression, ...]:
        return (self.inner,)


@dataclass(frozen=True)
class SymbolRef(Expression):
    name: str

    def __post_init__(self):
        if QUALIFIED_NAME_RE.fullmatch(self.name) is None:
            raise ValueError(f"'{self.name}' is not a (qualified) symbol name")

    @property
    def qualifier(self) -> Optional[str]:
        return self.name.split(".", 1)[0] if "." in self.name else None

    @property
    def local_name(self) -> str:
        return self.name.rsplit(".", 1)[-1]


@dataclass(frozen=True)
class StringLiteral(Expression):
    """Embedded lexical definition in single quotes"""
    text: str

    def __post_init__(self):
        if not self.text:
            raise ValueError("Embedded literals cannot be empty")


@dataclass(frozen=True)
class CharClass(Expression):
    """Inclusive character ranges; a single character is the range (c, c)"""
    ranges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if not self.ranges:
            raise ValueError("A character class needs at least one element")
        for lo, hi in self.ranges:
            if len(lo) != 1 or len(hi) != 1:
                raise ValueError("Character class bounds must be single characters")
            if ord(lo) > ord(hi):
                raise ValueError(f"Empty character range '{lo}'--'{hi}'")


@dataclass(frozen=True)
class Placeholder(Expression):
    """`$name` inside a template body; never survives instantiation"""
    name: str


def clone_expression(expression: Expression) -> Expression:
    """Deep copy with fresh NodeIds (annotations and spans kept)"""
    if isinstance(expression, Sequence):
        return replace(expression, terms=tuple(clone_expression(t) for t in expression.terms), id=new_node_id())
    if isinstance(expression, Alternative):
        return replace(expression, options=tuple(clone_expression(o) for o in expression.options), id=new_node_id())
    if isinstance(expression, Iteration):
        return replace(expression, inner=clone_expression(expression.inner), id=new_node_id())
    return replace(expression, id=new_node_id())
