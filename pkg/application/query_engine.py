"""Structural query matching"""
from typing import Iterator, Optional, Sequence as Seq

from domain import (
    Absent,
    AlternativePattern,
    Alternative,
    AmbiguousReferenceError,
    AnnotationSet,
    Binding,
    CapturePattern,
    CharClass,
    CharClassPattern,
    Equals,
    Expression,
    Grammar,
    HasType,
    ILogger,
    Iteration,
    IterationPattern,
    LiteralPattern,
    MetaPattern,
    NodeRun,
    PatternExpr,
    Predicate,
    Present,
    Production,
    ProductionPattern,
    Query,
    Sequence,
    SequencePattern,
    StringLiteral,
    Symbol,
    SymbolRef,
    VariablePattern,
    WildcardCapturePattern,
    WildcardPattern,
)
from infrastructure.localization import _


class QueryEngine:
    """
    Matches queries against grammars.
    Every matcher takes the binding built so far and returns the list of its
    consistent extensions; an empty list means no match.
    """

    def __init__(self, logger: Optional[ILogger] = None):
        self.logger = logger

    def match_query(self, query: Query, grammar: Grammar) -> list[Binding]:
        """All distinct bindings, in symbol / production / position order"""
        if query.rule_pattern is None:
            candidates = [Binding()]
        else:
            candidates = []
            pattern = query.rule_pattern
            for scope, symbol in grammar.scoped_symbols():
                env = Binding().bind(pattern.head_var, symbol.id)
                candidates.extend(self._match_productions(pattern.productions, symbol, env, grammar, scope, frozenset()))

        results: list[Binding] = []
        for candidate in candidates:
            results.extend(self._match_meta_patterns(query.meta_patterns, candidate, grammar))
        unique = list(dict.fromkeys(results))
        if self.logger:
            self.logger.debug(_("log_query_matches", count=len(unique)))
        return unique

    def _match_productions(
        self,
        patterns: Seq[ProductionPattern],
        symbol: Symbol,
        env: Binding,
        grammar: Grammar,
        scope: Optional[str],
        used: frozenset,
    ) -> Iterator[Binding]:
        # each pattern production takes a distinct actual production
        if not patterns:
            yield env
            return
        first, rest = patterns[0], patterns[1:]
        for index, production in enumerate(symbol.productions):
            if index in used:
                continue
            for extended in self.match_production(first, production, env, grammar, scope):
                yield from self._match_productions(rest, symbol, extended, grammar, scope, used | {index})

    def match_production(
        self,
        pattern: ProductionPattern,
        production: Production,
        env: Binding,
        grammar: Grammar,
        scope: Optional[str] = None,
    ) -> list[Binding]:
        if pattern.label is not None:
            env = env.bind(pattern.label, production.id)
            if env is None:
                return []
        return self.match_pattern(pattern.body, production.body, env, grammar, scope)

    def match_pattern(
        self,
        pattern: PatternExpr,
        node: Expression,
        env: Binding,
        grammar: Grammar,
        scope: Optional[str] = None,
    ) -> list[Binding]:
        if isinstance(pattern, WildcardPattern):
            return [env]
        if isinstance(pattern, WildcardCapturePattern):
            return _bound(env.bind(pattern.name, node.id))
        if isinstance(pattern, CapturePattern):
            return [
                extended
                for inner in self.match_pattern(pattern.inner, node, env, grammar, scope)
                for extended in _bound(inner.bind(pattern.name, node.id))
            ]
        if isinstance(pattern, VariablePattern):
            if not isinstance(node, SymbolRef):
                return []
            try:
                symbol = grammar.resolve_symbol(node.name, scope)
            except AmbiguousReferenceError:
                return []
            if symbol is None:
                return self._bind_external(pattern.name, node, env, grammar)
            return _bound(env.bind(pattern.name, symbol.id))
        if isinstance(pattern, LiteralPattern):
            return [env] if isinstance(node, StringLiteral) and node.text == pattern.text else []
        if isinstance(pattern, CharClassPattern):
            return [env] if isinstance(node, CharClass) and node.ranges == pattern.ranges else []
        if isinstance(pattern, IterationPattern):
            if not isinstance(node, Iteration) or node.kind is not pattern.kind:
                return []
            return self.match_pattern(pattern.inner, node.inner, env, grammar, scope)
        if isinstance(pattern, AlternativePattern):
            if not isinstance(node, Alternative) or len(node.options) != len(pattern.options):
                return []
            envs = [env]
            for option_pattern, option in zip(pattern.options, node.options):
                envs = [
                    extended
                    for current in envs
                    for extended in self.match_pattern(option_pattern, option, current, grammar, scope)
                ]
            return envs
        if isinstance(pattern, SequencePattern):
            terms = node.terms if isinstance(node, Sequence) else (node,)
            return self._match_terms(pattern.terms, terms, env, grammar, scope)
        raise TypeError(f"Unknown pattern {type(pattern).__name__}")

    @staticmethod
    def _bind_external(name: str, ref: SymbolRef, env: Binding, grammar: Grammar) -> list[Binding]:
        """A name defined nowhere binds its first reference; later uses must name the same symbol"""
        if name not in env:
            return _bound(env.bind(name, ref.id))
        target = env[name]
        if isinstance(target, NodeRun):
            return []
        bound = grammar.find_node(target)
        return [env] if isinstance(bound, SymbolRef) and bound.name == ref.name else []

    def _match_terms(self, patterns, terms, env: Binding, grammar: Grammar, scope) -> list[Binding]:
        if not patterns:
            return [] if terms else [env]
        head, rest = patterns[0], patterns[1:]
        results: list[Binding] = []
        if isinstance(head, (WildcardPattern, WildcardCapturePattern)):
            # a wildcard swallows any run of consecutive terms, including none
            for size in range(len(terms) + 1):
                current = env
                if isinstance(head, WildcardCapturePattern):
                    run = terms[:size]
                    target = run[0].id if size == 1 else NodeRun(tuple(term.id for term in run))
                    current = env.bind(head.name, target)
                    if current is None:
                        continue
                results.extend(self._match_terms(rest, terms[size:], current, grammar, scope))
            return results
        if not terms:
            return []
        for extended in self.match_pattern(head, terms[0], env, grammar, scope):
            results.extend(self._match_terms(rest, terms[1:], extended, grammar, scope))
        return results

    def _match_meta_patterns(self, patterns: Seq[MetaPattern], env: Binding, grammar: Grammar) -> list[Binding]:
        envs = [env]
        for meta in patterns:
            narrowed: list[Binding] = []
            for current in envs:
                if meta.var in current:
                    target = current[meta.var]
                    if isinstance(target, NodeRun):
                        continue
                    node = grammar.find_node(target)
                    if node is not None and self.matches_annotations(meta, node.annotations):
                        narrowed.append(current)
                    continue
                # free variables range over every symbol
                for symbol in grammar.all_symbols():
                    if self.matches_annotations(meta, symbol.annotations):
                        narrowed.append(current.bind(meta.var, symbol.id))
            envs = narrowed
        return envs

    def matches_annotations(self, meta: MetaPattern, annotations: AnnotationSet) -> bool:
        return all(self.eval_predicate(predicate, annotations) for predicate in meta.predicates)

    @staticmethod
    def eval_predicate(predicate: Predicate, annotations: AnnotationSet) -> bool:
        if isinstance(predicate, Present):
            return predicate.name in annotations
        if isinstance(predicate, Absent):
            return predicate.name not in annotations
        attribute = annotations.get(predicate.name)
        if attribute is None or attribute.is_flag:
            return False
        if isinstance(predicate, Equals):
            return attribute.value == predicate.value
        if isinstance(predicate, HasType):
            return attribute.value.kind is predicate.kind
        raise TypeError(f"Unknown predicate {type(predicate).__name__}")


def _bound(env: Optional[Binding]) -> list[Binding]:
    return [] if env is None else [env]
