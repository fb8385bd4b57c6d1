"""Lark-based frontend for grammar, aspect and template files"""
import os
from functools import lru_cache
from typing import Any, Optional

from lark import Lark, UnexpectedCharacters, UnexpectedInput, UnexpectedToken
from lark.exceptions import VisitError
from lark.lexer import PatternStr

from domain import (
    AnnotationSet,
    Aspect,
    AspectRule,
    Diagnostic,
    FrontendError,
    Grammar,
    IGrammarParser,
    ImportDecl,
    ParseResult,
    Placeholder,
    Production,
    Query,
    Severity,
    SourceSpan,
    Symbol,
    Template,
    TemplateKind,
    TemplateLibrary,
    TemplateRule,
    Param,
    Value,
    reference_diagnostics,
    has_errors,
)
from infrastructure.localization import _
from .ast_builder import AstBuilder, RuleSyntax, TemplateSyntax

_START_RULES = ["grammar_file", "aspect_file", "template_file", "query_text", "attribute_list", "value_text"]


@lru_cache(maxsize=1)
def _lark() -> Lark:
    return Lark.open(
        "gramweave.lark",
        rel_to=__file__,
        parser="lalr",
        start=_START_RULES,
        propagate_positions=True,
        maybe_placeholders=False,
    )


def _end_span(text: str, file_name: str) -> SourceSpan:
    lines = text.split("\n")
    return SourceSpan(file_name, len(text), len(text), len(lines), len(lines[-1]) + 1)


def _point_span(text: str, file_name: str, offset: Optional[int], line, column) -> SourceSpan:
    if offset is None or line is None or column is None:
        return _end_span(text, file_name)
    offset = min(offset, len(text))
    return SourceSpan(file_name, offset, min(offset + 1, len(text)), line, column)


class LarkGrammarParser(IGrammarParser):
    """
    LALR parser over gramweave.lark.
    Every problem becomes a Diagnostic; a result value is only returned when
    no error was found.
    """

    def __init__(self, allow_undefined_symbols: bool = False):
        self.allow_undefined_symbols = allow_undefined_symbols

    # ---- low level

    def _describe_expected(self, names) -> str:
        described = []
        for name in sorted(names):
            if name == "$END":
                described.append(_("parse_end_of_input"))
                continue
            try:
                terminal = _lark().get_terminal(name)
            except KeyError:
                described.append(name)
                continue
            if isinstance(terminal.pattern, PatternStr):
                described.append(f'"{terminal.pattern.value}"')
            else:
                described.append(name)
        return ", ".join(described)

    def _syntax_diagnostic(self, error: UnexpectedInput, text: str, file_name: str) -> Diagnostic:
        if isinstance(error, UnexpectedCharacters):
            span = _point_span(text, file_name, error.pos_in_stream, error.line, error.column)
            key = "parse_unterminated_literal" if error.char in "'\"" else "parse_unexpected_character"
            return Diagnostic(Severity.ERROR, _(key, char=error.char), span)
        if isinstance(error, UnexpectedToken):
            expected = self._describe_expected(error.expected)
            if error.token.type == "$END":
                return Diagnostic(Severity.ERROR, _("parse_unexpected_end", expected=expected), _end_span(text, file_name))
            token = error.token
            span = SourceSpan(file_name, token.start_pos, token.end_pos, token.line, token.column)
            if token.type == "PUNCT":
                # bare punctuation only exists inside {{ }}; elsewhere it is a stray character
                key = "parse_unterminated_literal" if str(token) == "'" else "parse_unexpected_character"
                return Diagnostic(Severity.ERROR, _(key, char=str(token)), span)
            return Diagnostic(Severity.ERROR, _("parse_unexpected_token", token=str(token), expected=expected), span)
        span = _point_span(text, file_name, getattr(error, "pos_in_stream", None), error.line, error.column)
        return Diagnostic(Severity.ERROR, _("parse_invalid_construct", detail=str(error)), span)

    def _run(self, text: str, file_name: str, start: str, allow_placeholders: bool = False) -> tuple[Any, list[Diagnostic]]:
        try:
            tree = _lark().parse(text, start=start)
        except UnexpectedInput as error:
            return None, [self._syntax_diagnostic(error, text, file_name)]
        try:
            return AstBuilder(file_name, allow_placeholders).transform(tree), []
        except VisitError as error:
            cause = error.orig_exc
            if isinstance(cause, FrontendError):
                message = _(cause.key, **cause.details)
                return None, [Diagnostic(Severity.ERROR, message, cause.span or _end_span(text, file_name))]
            if isinstance(cause, ValueError):
                meta = getattr(error.obj, "meta", None)
                span = None
                if meta is not None and not meta.empty:
                    span = SourceSpan(file_name, meta.start_pos, meta.end_pos, meta.line, meta.column)
                message = _("parse_invalid_construct", detail=str(cause))
                return None, [Diagnostic(Severity.ERROR, message, span or _end_span(text, file_name))]
            raise

    @staticmethod
    def _finish(value, diagnostics: list[Diagnostic]) -> ParseResult:
        if value is None or has_errors(diagnostics):
            return ParseResult(None, tuple(diagnostics))
        return ParseResult(value, tuple(diagnostics))

    # ---- grammar files

    def parse_grammar(self, text: str, file_name: str) -> ParseResult[Grammar]:
        items, diagnostics = self._run(text, file_name, "grammar_file")
        if items is None:
            return ParseResult(None, tuple(diagnostics))

        imports = [item for item in items if isinstance(item, ImportDecl)]
        symbols: list[Symbol] = []
        seen: set[str] = set()
        for rule in (item for item in items if isinstance(item, RuleSyntax)):
            if rule.head in seen:
                diagnostics.append(Diagnostic(Severity.ERROR, _("parse_duplicate_symbol", name=rule.head), rule.span))
                continue
            seen.add(rule.head)
            symbols.append(Symbol(
                rule.head,
                tuple(Production(body, span=span) for body, span in rule.productions),
                span=rule.span,
            ))

        grammar = Grammar(
            symbols=tuple(symbols),
            imports=tuple(imports),
            file_name=file_name,
            span=SourceSpan(file_name, 0, len(text), 1, 1),
        )
        # with imports, references are checked once namespaces exist
        if not imports:
            diagnostics.extend(reference_diagnostics(grammar, _, self.allow_undefined_symbols))
        return self._finish(grammar, diagnostics)

    # ---- aspects and queries

    def _query_diagnostics(self, query: Query) -> list[Diagnostic]:
        diagnostics = []
        sites = query.capture_sites()
        for name in sorted({name for name in sites if sites.count(name) > 1}):
            diagnostics.append(Diagnostic(Severity.ERROR, _("parse_duplicate_capture", name=name), query.span))
        return diagnostics

    def _rule_diagnostics(self, rule: AspectRule) -> list[Diagnostic]:
        diagnostics = self._query_diagnostics(rule.query)
        for name, span in rule.unbound_uses():
            diagnostics.append(Diagnostic(Severity.ERROR, _("parse_unbound_variable", name=name), span))
        return diagnostics

    def parse_aspect(self, text: str, file_name: str) -> ParseResult[Aspect]:
        rules, diagnostics = self._run(text, file_name, "aspect_file")
        if rules is None:
            return ParseResult(None, tuple(diagnostics))
        for rule in rules:
            diagnostics.extend(self._rule_diagnostics(rule))
        name = os.path.splitext(os.path.basename(file_name))[0]
        return self._finish(Aspect(name, tuple(rules)), diagnostics)

    def parse_query(self, text: str, file_name: str) -> ParseResult[Query]:
        query, diagnostics = self._run(text, file_name, "query_text")
        if query is None:
            return ParseResult(None, tuple(diagnostics))
        diagnostics.extend(self._query_diagnostics(query))
        return self._finish(query, diagnostics)

    def parse_attributes(self, text: str, file_name: str) -> ParseResult[AnnotationSet]:
        annotations, diagnostics = self._run(text, file_name, "attribute_list")
        return self._finish(annotations, diagnostics)

    def parse_value(self, text: str, file_name: str) -> ParseResult[Value]:
        value, diagnostics = self._run(text, file_name, "value_text")
        return self._finish(value, diagnostics)

    # ---- templates

    def _build_template(self, syntax: TemplateSyntax, diagnostics: list[Diagnostic]) -> Optional[Template]:
        errors_before = len(diagnostics)
        params: dict[str, Param] = {}
        for param in syntax.params:
            if param.name in params:
                diagnostics.append(Diagnostic(
                    Severity.ERROR, _("parse_duplicate_param", template=syntax.name, name=param.name), param.span
                ))
                continue
            if param.many and param.kind is not TemplateKind.PRODUCTION:
                diagnostics.append(Diagnostic(Severity.ERROR, _("parse_many_param_kind", name=param.name), param.span))
                continue
            params[param.name] = Param(param.kind, param.name, param.many, span=param.span)

        rules: list[TemplateRule] = []
        for rule in syntax.rules:
            if rule.head_is_placeholder:
                head_param = params.get(rule.head)
                if head_param is None:
                    diagnostics.append(Diagnostic(
                        Severity.ERROR, _("parse_undeclared_placeholder", template=syntax.name, name=rule.head), rule.span
                    ))
                elif head_param.kind is not TemplateKind.ID:
                    diagnostics.append(Diagnostic(
                        Severity.ERROR, _("parse_head_placeholder_kind", name=rule.head), rule.span
                    ))
            for body, _span in rule.productions:
                for node in body.walk():
                    if not isinstance(node, Placeholder):
                        continue
                    param = params.get(node.name)
                    if param is None:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR,
                            _("parse_undeclared_placeholder", template=syntax.name, name=node.name),
                            node.span,
                        ))
                    elif param.kind is TemplateKind.PRODUCTION and node is not body:
                        diagnostics.append(Diagnostic(
                            Severity.ERROR, _("parse_production_placeholder_position", name=node.name), node.span
                        ))
            rules.append(TemplateRule(
                rule.head,
                tuple(body for body, _span in rule.productions),
                head_is_placeholder=rule.head_is_placeholder,
                span=rule.span,
            ))

        if len(diagnostics) > errors_before:
            return None
        return Template(syntax.result_kind, syntax.name, tuple(params.values()), tuple(rules), span=syntax.span)

    def parse_templates(self, text: str, file_name: str) -> ParseResult[TemplateLibrary]:
        declarations, diagnostics = self._run(text, file_name, "template_file", allow_placeholders=True)
        if declarations is None:
            return ParseResult(None, tuple(diagnostics))
        templates: dict[str, Template] = {}
        for syntax in declarations:
            if syntax.name in templates:
                diagnostics.append(Diagnostic(
                    Severity.ERROR, _("parse_duplicate_template", name=syntax.name), syntax.span
                ))
                continue
            template = self._build_template(syntax, diagnostics)
            if template is not None:
                templates[syntax.name] = template
        return self._finish(TemplateLibrary(templates), diagnostics)
