"""Grammar, symbols, productions and namespaces"""
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Callable, Iterator, Optional, Union

from .errors import AmbiguousReferenceError, UnknownNodeError
from .expressions import Alternative, Expression, Iteration, Sequence, SymbolRef
from .node_id import NodeId, new_node_id
from .source_span import SourceSpan
from .template import ImportDecl
from .values import AnnotationSet, Attribute, is_identifier


@dataclass(frozen=True)
class Production:
    """Entity: one `||`-separated right-hand side of a symbol"""
    body: Expression
    annotations: AnnotationSet = field(default_factory=AnnotationSet)
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)
    id: NodeId = field(default_factory=new_node_id, compare=False)


@dataclass(frozen=True)
class Symbol:
    """Entity: a grammar symbol with its ordered productions"""
    name: str
    productions: tuple[Production, ...]
    annotations: AnnotationSet = field(default_factory=AnnotationSet)
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)
    id: NodeId = field(default_factory=new_node_id, compare=False)

    def __post_init__(self):
        """Validates data"""
        if not is_identifier(self.name):
            raise ValueError(f"'{self.name}' is not a valid symbol name")
        if not self.productions:
            raise ValueError(f"Symbol '{self.name}' has no productions")


@dataclass(frozen=True)
class Namespace:
    """Entity: symbols produced by one template instantiation"""
    alias: str
    symbols: tuple[Symbol, ...]
    template_name: str = ""
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        names = [symbol.name for symbol in self.symbols]
        if len(names) != len(set(names)):
            raise ValueError(f"Duplicate symbol names in namespace '{self.alias}'")

    def get(self, name: str) -> Optional[Symbol]:
        return next((symbol for symbol in self.symbols if symbol.name == name), None)


Node = Union["Grammar", Symbol, Production, Expression]


@dataclass(frozen=True)
class Grammar:
    """Entity: an annotated grammar; immutable, updates return copies"""
    symbols: tuple[Symbol, ...] = ()
    annotations: AnnotationSet = field(default_factory=AnnotationSet)
    namespaces: tuple[Namespace, ...] = ()
    imports: tuple[ImportDecl, ...] = ()
    file_name: str = field(default="<grammar>", compare=False)
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)
    id: NodeId = field(default_factory=new_node_id, compare=False)

    def __post_init__(self):
        """Validates data"""
        names = [symbol.name for symbol in self.symbols]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValueError(f"Duplicate symbol names: {', '.join(duplicates)}")
        aliases = [namespace.alias for namespace in self.namespaces]
        if len(aliases) != len(set(aliases)):
            raise ValueError("Duplicate namespace aliases")

    def namespace(self, alias: str) -> Optional[Namespace]:
        return next((ns for ns in self.namespaces if ns.alias == alias), None)

    def scoped_symbols(self) -> Iterator[tuple[Optional[str], Symbol]]:
        """Namespace symbols in import order, then root symbols (scope None)"""
        for namespace in self.namespaces:
            for symbol in namespace.symbols:
                yield namespace.alias, symbol
        for symbol in self.symbols:
            yield None, symbol

    def all_symbols(self) -> list[Symbol]:
        return [symbol for _, symbol in self.scoped_symbols()]

    def resolve_symbol(self, name: str, scope: Optional[str] = None) -> Optional[Symbol]:
        """
        Resolves a possibly-qualified name.
        `alias.Name` looks inside one namespace only. An unqualified name seen
        from inside namespace `scope` tries that namespace first; otherwise the
        root scope wins, then namespaces in import order, where two candidates
        raise AmbiguousReferenceError.
        """
        if "." in name:
            alias, local = name.split(".", 1)
            namespace = self.namespace(alias)
            return namespace.get(local) if namespace else None
        if scope is not None:
            namespace = self.namespace(scope)
            local_symbol = namespace.get(name) if namespace else None
            if local_symbol is not None:
                return local_symbol
        for symbol in self.symbols:
            if symbol.name == name:
                return symbol
        candidates = [(ns.alias, ns.get(name)) for ns in self.namespaces if ns.get(name) is not None]
        if len(candidates) > 1:
            raise AmbiguousReferenceError(name, [alias for alias, _ in candidates])
        return candidates[0][1] if candidates else None

    def walk(self) -> Iterator[Node]:
        """Depth-first pre-order over every node, source order"""
        yield self
        for _, symbol in self.scoped_symbols():
            yield symbol
            for production in symbol.productions:
                yield production
                yield from production.body.walk()

    def iter_paths(self) -> Iterator[tuple[str, Node]]:
        """Same order as walk, paired with the stable textual node path"""
        yield "@grammar", self
        for scope, symbol in self.scoped_symbols():
            symbol_path = f"{scope}.{symbol.name}" if scope else symbol.name
            yield symbol_path, symbol
            for index, production in enumerate(symbol.productions):
                production_path = f"{symbol_path}/production[{index}]"
                yield production_path, production
                yield from _expression_paths(production.body, production_path, "0")

    @cached_property
    def _index(self) -> dict[NodeId, Node]:
        return {node.id: node for node in self.walk()}

    def find_node(self, node_id: NodeId) -> Optional[Node]:
        return self._index.get(node_id)

    def node_path(self, node_id: NodeId) -> str:
        for path, node in self.iter_paths():
            if node.id == node_id:
                return path
        raise UnknownNodeError(node_id)

    def attach(self, target: NodeId, attribute: Attribute) -> "Grammar":
        """Returns a copy where `target` carries `attribute` (same name replaced)"""
        if self.find_node(target) is None:
            raise UnknownNodeError(target)

        def annotate(node):
            return replace(node, annotations=node.annotations.with_attribute(attribute))

        if target == self.id:
            return annotate(self)
        return replace(
            self,
            symbols=tuple(_replace_in_symbol(s, target, annotate) for s in self.symbols),
            namespaces=tuple(
                replace(ns, symbols=tuple(_replace_in_symbol(s, target, annotate) for s in ns.symbols))
                for ns in self.namespaces
            ),
        )


def _expression_paths(expression: Expression, production_path: str, position: str):
    yield f"{production_path}/expr[{position}]", expression
    for index, child in enumerate(expression.children()):
        yield from _expression_paths(child, production_path, f"{position}.{index}")


def _replace_in_symbol(symbol: Symbol, target: NodeId, update: Callable) -> Symbol:
    if symbol.id == target:
        return update(symbol)
    productions = tuple(_replace_in_production(p, target, update) for p in symbol.productions)
    if all(new is old for new, old in zip(productions, symbol.productions)):
        return symbol
    return replace(symbol, productions=productions)


def _replace_in_production(production: Production, target: NodeId, update: Callable) -> Production:
    if production.id == target:
        return update(production)
    body = replace_expression(production.body, target, update)
    return production if body is production.body else replace(production, body=body)


def replace_expression(expression: Expression, target: NodeId, update: Callable) -> Expression:
    """Rebuilds only the path leading to `target`; untouched subtrees are shared"""
    if expression.id == target:
        return update(expression)
    if isinstance(expression, Sequence):
        terms = tuple(replace_expression(t, target, update) for t in expression.terms)
        changed = any(new is not old for new, old in zip(terms, expression.terms))
        return replace(expression, terms=terms) if changed else expression
    if isinstance(expression, Alternative):
        options = tuple(replace_expression(o, target, update) for o in expression.options)
        changed = any(new is not old for new, old in zip(options, expression.options))
        return replace(expression, options=options) if changed else expression
    if isinstance(expression, Iteration):
        inner = replace_expression(expression.inner, target, update)
        return expression if inner is expression.inner else replace(expression, inner=inner)
    return expression


def iter_symbol_refs(expression: Expression) -> Iterator[SymbolRef]:
    for node in expression.walk():
        if isinstance(node, SymbolRef):
            yield node
