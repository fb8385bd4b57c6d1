"""Structural queries: pattern expressions, metadata predicates, bindings"""
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union

from .expressions import IterationKind
from .node_id import NodeId
from .source_span import SourceSpan
from .values import Value, ValueKind


@dataclass(frozen=True, kw_only=True)
class PatternExpr:
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def children(self) -> tuple["PatternExpr", ...]:
        return ()

    def walk(self) -> Iterator["PatternExpr"]:
        yield self
        for child in self.children():
            yield from child.walk()


@dataclass(frozen=True)
class SequencePattern(PatternExpr):
    terms: tuple[PatternExpr, ...]

    def children(self):
        return self.terms


@dataclass(frozen=True)
class AlternativePattern(PatternExpr):
    options: tuple[PatternExpr, ...]

    def children(self):
        return self.options


@dataclass(frozen=True)
class IterationPattern(PatternExpr):
    inner: PatternExpr
    kind: IterationKind

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class VariablePattern(PatternExpr):
    """Matches one symbol reference; repeated names unify"""
    name: str


@dataclass(frozen=True)
class LiteralPattern(PatternExpr):
    text: str


@dataclass(frozen=True)
class CharClassPattern(PatternExpr):
    ranges: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class CapturePattern(PatternExpr):
    """`X=( ... )`"""
    name: str
    inner: PatternExpr

    def children(self):
        return (self.inner,)


@dataclass(frozen=True)
class WildcardCapturePattern(PatternExpr):
    """`X=..`"""
    name: str


@dataclass(frozen=True)
class WildcardPattern(PatternExpr):
    """`..`"""


@dataclass(frozen=True)
class ProductionPattern:
    """A pattern production, optionally labelled `P:` to bind the production itself"""
    body: PatternExpr
    label: Optional[str] = None
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class RulePattern:
    head_var: str
    productions: tuple[ProductionPattern, ...]
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.productions:
            raise ValueError("A rule pattern needs at least one production")


@dataclass(frozen=True)
class Present:
    name: str


@dataclass(frozen=True)
class Absent:
    name: str


@dataclass(frozen=True)
class Equals:
    name: str
    value: Value


@dataclass(frozen=True)
class HasType:
    name: str
    kind: ValueKind


Predicate = Union[Present, Absent, Equals, HasType]


@dataclass(frozen=True)
class MetaPattern:
    var: str
    predicates: tuple[Predicate, ...] = ()
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        names = [predicate.name for predicate in self.predicates]
        if len(names) != len(set(names)):
            raise ValueError(f"Metadata pattern '{self.var}' constrains an attribute twice")


@dataclass(frozen=True)
class Query:
    rule_pattern: Optional[RulePattern] = None
    meta_patterns: tuple[MetaPattern, ...] = ()
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """Validates data"""
        if self.rule_pattern is None and not self.meta_patterns:
            raise ValueError("A query needs a rule pattern or a metadata pattern")

    def variables(self) -> list[str]:
        """Every variable the query binds, in order of first appearance"""
        names: list[str] = []

        def add(name: str) -> None:
            if name not in names:
                names.append(name)

        if self.rule_pattern is not None:
            add(self.rule_pattern.head_var)
            for production in self.rule_pattern.productions:
                if production.label:
                    add(production.label)
                for node in production.body.walk():
                    if isinstance(node, (VariablePattern, CapturePattern, WildcardCapturePattern)):
                        add(node.name)
        for meta in self.meta_patterns:
            add(meta.var)
        return names

    def capture_sites(self) -> list[str]:
        """Names introduced by captures and production labels (one site each)"""
        sites: list[str] = []
        if self.rule_pattern is not None:
            for production in self.rule_pattern.productions:
                if production.label:
                    sites.append(production.label)
                for node in production.body.walk():
                    if isinstance(node, (CapturePattern, WildcardCapturePattern)):
                        sites.append(node.name)
        return sites


@dataclass(frozen=True)
class NodeRun:
    """Consecutive sequence terms matched by a capturing wildcard"""
    nodes: tuple[NodeId, ...]


Target = Union[NodeId, NodeRun]


class Binding(Mapping[str, Target]):
    """Immutable variable -> matched node association"""
    __slots__ = ("_items",)

    def __init__(self, items: Union[Mapping[str, Target], tuple, list] = ()):
        self._items = dict(items)

    def __getitem__(self, name: str) -> Target:
        return self._items[name]

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __hash__(self) -> int:
        return hash(frozenset(self._items.items()))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Binding):
            return self._items == other._items
        return NotImplemented

    def __repr__(self) -> str:
        return f"Binding({self._items!r})"

    def bind(self, name: str, target: Target) -> Optional["Binding"]:
        """Extends the binding; None when `name` is already bound elsewhere"""
        if name in self._items:
            return self if self._items[name] == target else None
        return Binding({**self._items, name: target})

    @staticmethod
    def target_nodes(target: Target) -> tuple[NodeId, ...]:
        return target.nodes if isinstance(target, NodeRun) else (target,)
