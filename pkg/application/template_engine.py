"""Template instantiation, import resolution and namespace flattening"""
from dataclasses import replace
from typing import Callable, Optional, Union

from domain import (
    Alternative,
    Argument,
    Diagnostic,
    Expression,
    Grammar,
    ILogger,
    Iteration,
    Namespace,
    NodeId,
    Param,
    ParseResult,
    Placeholder,
    Production,
    Sequence,
    Severity,
    Symbol,
    SymbolRef,
    Template,
    TemplateError,
    TemplateKind,
    TemplateLibrary,
    AmbiguousReferenceError,
    clone_expression,
    has_errors,
    new_node_id,
    reference_diagnostics,
)
from infrastructure.localization import _

# what a placeholder stands for after argument checking
Substitution = Union[str, Expression, tuple[Expression, ...]]


class TemplateEngine:
    """Expands imports eagerly; the resulting grammar carries no templates"""

    def __init__(
        self,
        logger: Optional[ILogger] = None,
        namespace_prefix: str = "_ns",
        allow_undefined_symbols: bool = False,
    ):
        self.logger = logger
        self.namespace_prefix = namespace_prefix
        self.allow_undefined_symbols = allow_undefined_symbols

    # ---- instantiation

    def _bind_argument(self, template: Template, param: Param, argument: Argument) -> Substitution:
        if param.many:
            return argument.productions

        def kind_error() -> TemplateError:
            return TemplateError("template_kind", template=template.name, param=param.name, kind=param.kind.value)

        if not argument.is_single:
            raise kind_error()
        expression = argument.productions[0]
        if param.kind is TemplateKind.ID:
            if not isinstance(expression, SymbolRef) or expression.qualifier is not None:
                raise kind_error()
            return expression.name
        if param.kind is TemplateKind.SYMBOL and not isinstance(expression, SymbolRef):
            raise kind_error()
        return expression

    def _substitute(self, expression: Expression, substitutions: dict[str, Substitution], template: Template) -> Expression:
        """Copy of `expression` with fresh NodeIds and every placeholder replaced"""
        if isinstance(expression, Placeholder):
            value = substitutions[expression.name]
            if isinstance(value, str):
                return SymbolRef(value, span=expression.span)
            if isinstance(value, tuple):
                raise TemplateError("template_kind", template=template.name, param=expression.name,
                                    kind=TemplateKind.PRODUCTION.value)
            return clone_expression(value)
        if isinstance(expression, Sequence):
            terms = tuple(self._substitute(t, substitutions, template) for t in expression.terms)
            return replace(expression, terms=terms, id=new_node_id())
        if isinstance(expression, Alternative):
            options = tuple(self._substitute(o, substitutions, template) for o in expression.options)
            return replace(expression, options=options, id=new_node_id())
        if isinstance(expression, Iteration):
            return replace(expression, inner=self._substitute(expression.inner, substitutions, template), id=new_node_id())
        return replace(expression, id=new_node_id())

    def instantiate(self, template: Template, args: list[Argument], alias: str = "") -> Namespace:
        """Raises TemplateError on arity, kind or name clash problems"""
        if len(args) != len(template.params):
            raise TemplateError("template_arity", template=template.name,
                                expected=len(template.params), actual=len(args))
        substitutions = {
            param.name: self._bind_argument(template, param, argument)
            for param, argument in zip(template.params, args)
        }

        symbols: list[Symbol] = []
        for rule in template.body:
            name = substitutions[rule.head] if rule.head_is_placeholder else rule.head
            if any(symbol.name == name for symbol in symbols):
                raise TemplateError("template_name_clash", template=template.name, name=name)
            bodies: list[Expression] = []
            for body in rule.productions:
                value = substitutions.get(body.name) if isinstance(body, Placeholder) else None
                if isinstance(value, tuple):
                    # Production* splices its whole list here
                    bodies.extend(clone_expression(item) for item in value)
                else:
                    bodies.append(self._substitute(body, substitutions, template))
            if not bodies:
                raise TemplateError("template_empty_symbol", template=template.name, name=name)
            symbols.append(Symbol(name, tuple(Production(b, span=b.span) for b in bodies), span=rule.span))

        if self.logger:
            self.logger.debug(_("log_template_instantiated", template=template.name, alias=alias, count=len(symbols)))
        return Namespace(alias, tuple(symbols), template_name=template.name, span=template.span)

    # ---- imports

    def resolve_imports(self, grammar: Grammar, library: TemplateLibrary) -> ParseResult[Grammar]:
        """Turns every import into a namespace, then validates all references"""
        diagnostics: list[Diagnostic] = []
        namespaces = list(grammar.namespaces)
        taken = {namespace.alias for namespace in namespaces}
        reserved = {decl.alias for decl in grammar.imports if decl.alias}
        anonymous = 0

        for decl in grammar.imports:
            template = library.get(decl.template_name)
            if template is None:
                diagnostics.append(Diagnostic(Severity.ERROR, _("template_unknown", name=decl.template_name), decl.span))
                continue
            if template.result_kind is not TemplateKind.SYMBOL:
                diagnostics.append(Diagnostic(
                    Severity.ERROR,
                    _("template_not_importable", name=template.name, kind=template.result_kind.value),
                    decl.span,
                ))
                continue
            if decl.alias is not None:
                if decl.alias in taken:
                    diagnostics.append(Diagnostic(Severity.ERROR, _("template_alias_collision", alias=decl.alias), decl.span))
                    continue
                alias = decl.alias
            else:
                anonymous += 1
                alias = f"{self.namespace_prefix}{anonymous}"
                while alias in taken or alias in reserved:
                    anonymous += 1
                    alias = f"{self.namespace_prefix}{anonymous}"
            try:
                namespace = self.instantiate(template, list(decl.args), alias)
            except TemplateError as error:
                diagnostics.append(Diagnostic(Severity.ERROR, _(error.key, **error.details), decl.span))
                continue
            namespaces.append(namespace)
            taken.add(alias)

        if has_errors(diagnostics):
            return ParseResult(None, tuple(diagnostics))
        resolved = replace(grammar, namespaces=tuple(namespaces), imports=())
        diagnostics.extend(reference_diagnostics(resolved, _, self.allow_undefined_symbols))
        if has_errors(diagnostics):
            return ParseResult(None, tuple(diagnostics))
        return ParseResult(resolved, tuple(diagnostics))

    # ---- flattening

    def flatten(self, grammar: Grammar) -> Grammar:
        """
        Moves namespace symbols into the root scope, namespaces first.
        A name already taken becomes `<alias>_<Name>`; references are
        rewritten to the final name of the symbol they resolved to.
        """
        if not grammar.namespaces:
            return grammar
        final_names: dict[NodeId, str] = {symbol.id: symbol.name for symbol in grammar.symbols}
        taken = set(final_names.values())
        for namespace in grammar.namespaces:
            for symbol in namespace.symbols:
                name = symbol.name
                if name in taken:
                    base = f"{namespace.alias}_{symbol.name}"
                    name, counter = base, 2
                    while name in taken:
                        name, counter = f"{base}{counter}", counter + 1
                taken.add(name)
                final_names[symbol.id] = name

        def rename(scope: Optional[str]) -> Callable[[SymbolRef], SymbolRef]:
            def update(ref: SymbolRef) -> SymbolRef:
                try:
                    target = grammar.resolve_symbol(ref.name, scope)
                except AmbiguousReferenceError:
                    return ref
                if target is None or final_names[target.id] == ref.name:
                    return ref
                return replace(ref, name=final_names[target.id])
            return update

        symbols = [
            replace(
                symbol,
                name=final_names[symbol.id],
                productions=tuple(
                    replace(p, body=map_symbol_refs(p.body, rename(scope))) for p in symbol.productions
                ),
            )
            for scope, symbol in grammar.scoped_symbols()
        ]
        return replace(grammar, symbols=tuple(symbols), namespaces=())


def map_symbol_refs(expression: Expression, update: Callable[[SymbolRef], SymbolRef]) -> Expression:
    """Rebuilds `expression` with `update` applied to each reference; NodeIds are kept"""
    if isinstance(expression, SymbolRef):
        return update(expression)
    if isinstance(expression, Sequence):
        return replace(expression, terms=tuple(map_symbol_refs(t, update) for t in expression.terms))
    if isinstance(expression, Alternative):
        return replace(expression, options=tuple(map_symbol_refs(o, update) for o in expression.options))
    if isinstance(expression, Iteration):
        return replace(expression, inner=map_symbol_refs(expression.inner, update))
    return expression
