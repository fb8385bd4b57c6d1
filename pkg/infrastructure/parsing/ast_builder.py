"""Turns lark parse trees into domain objects"""
import re
from dataclasses import dataclass, field
from typing import Optional

from lark import Token, Transformer, v_args

from domain import (
    Absent,
    Alternative,
    AlternativePattern,
    AnnotationSet,
    AnnotationVal,
    Argument,
    AspectRule,
    Attachment,
    Attribute,
    CapturePattern,
    CharClass,
    CharClassPattern,
    ConstraintRule,
    Equals,
    Expression,
    FrontendError,
    HasType,
    IdentifierVal,
    ImportDecl,
    IntVal,
    Iteration,
    IterationKind,
    IterationPattern,
    LiteralPattern,
    MetaPattern,
    Placeholder,
    Present,
    ProductionPattern,
    Punctuation,
    Query,
    RulePattern,
    Sequence,
    SequencePattern,
    SequenceVal,
    Severity,
    SourceSpan,
    StringLiteral,
    StringVal,
    SymbolRef,
    TemplateKind,
    ValueKind,
    VariablePattern,
    WildcardCapturePattern,
    WildcardPattern,
)
from .escapes import unescape_literal, unescape_string

_LINE_BREAK_RE = re.compile(r"[ \t]*\r?\n\s*")


@dataclass
class RuleSyntax:
    """`Head -> p1 || p2 ;` before symbol-level validation"""
    head: str
    productions: list[tuple[Expression, Optional[SourceSpan]]]
    head_is_placeholder: bool = False
    span: Optional[SourceSpan] = None


@dataclass
class ParamSyntax:
    kind: TemplateKind
    name: str
    many: bool = False
    span: Optional[SourceSpan] = None


@dataclass
class TemplateSyntax:
    result_kind: TemplateKind
    name: str
    params: list[ParamSyntax] = field(default_factory=list)
    rules: list[RuleSyntax] = field(default_factory=list)
    span: Optional[SourceSpan] = None


@v_args(meta=True)
class AstBuilder(Transformer):
    """
    One callback per grammar rule / alias of gramweave.lark.
    Grammar and template files come back as lists of RuleSyntax, ImportDecl
    and TemplateSyntax so the parser can report every duplicate at once.
    """

    def __init__(self, file_name: str, allow_placeholders: bool = False):
        super().__init__(visit_tokens=False)
        self.file_name = file_name
        self.allow_placeholders = allow_placeholders

    def _span(self, meta) -> Optional[SourceSpan]:
        if getattr(meta, "empty", True):
            return None
        return SourceSpan(self.file_name, meta.start_pos, meta.end_pos, meta.line, meta.column)

    def _token_span(self, token: Token) -> SourceSpan:
        return SourceSpan(self.file_name, token.start_pos, token.end_pos, token.line, token.column)

    def _placeholder_name(self, token: Token) -> str:
        if not self.allow_placeholders:
            raise FrontendError("parse_placeholder_outside_template", self._token_span(token), name=str(token))
        return str(token)[1:]

    def _annotation_set(self, meta, attributes) -> AnnotationSet:
        seen: set[str] = set()
        for attribute in attributes:
            if attribute.name in seen:
                raise FrontendError("parse_duplicate_attribute", self._span(meta), name=attribute.name)
            seen.add(attribute.name)
        return AnnotationSet(tuple(attributes))

    # ---- grammar files

    def grammar_file(self, meta, items):
        return list(items)

    def named_import(self, meta, children):
        alias, name, args = children
        return ImportDecl(str(name), tuple(args), alias=str(alias), span=self._span(meta))

    def anonymous_import(self, meta, children):
        name, args = children
        return ImportDecl(str(name), tuple(args), span=self._span(meta))

    def import_args(self, meta, args):
        return list(args)

    def production_list(self, meta, bodies):
        return Argument(tuple(bodies), span=self._span(meta))

    def empty_arg(self, meta, _children):
        return Argument((), span=self._span(meta))

    def rule(self, meta, children):
        head, *bodies = children
        is_placeholder = head.type == "PLACEHOLDER"
        name = self._placeholder_name(head) if is_placeholder else str(head)
        return RuleSyntax(
            head=name,
            productions=[(body, body.span) for body in bodies],
            head_is_placeholder=is_placeholder,
            span=self._span(meta),
        )

    def expr(self, meta, options):
        if len(options) == 1:
            return options[0]
        return Alternative(tuple(options), span=self._span(meta))

    def seq(self, meta, terms):
        if len(terms) == 1:
            return terms[0]
        return Sequence(tuple(terms), span=self._span(meta))

    def term(self, meta, children):
        if len(children) == 1:
            return children[0]
        inner, kind = children
        return Iteration(inner, kind, span=self._span(meta))

    def postfix(self, meta, children):
        return IterationKind(str(children[0]))

    def qual_ident(self, meta, parts):
        return SymbolRef(".".join(str(part) for part in parts), span=self._span(meta))

    def literal(self, meta, children):
        text = unescape_literal(str(children[0]))
        if not text:
            raise FrontendError("parse_empty_literal", self._span(meta))
        return StringLiteral(text, span=self._span(meta))

    def char_class(self, meta, items):
        return CharClass(tuple(items), span=self._span(meta))

    def class_item(self, meta, bounds):
        chars = [unescape_literal(str(bound)) for bound in bounds]
        for bound, char in zip(bounds, chars):
            if len(char) != 1:
                raise FrontendError("parse_class_bound", self._token_span(bound), text=str(bound))
        lo, hi = chars[0], chars[-1]
        if ord(lo) > ord(hi):
            raise FrontendError("parse_class_range", self._span(meta), lo=lo, hi=hi)
        return lo, hi

    def placeholder(self, meta, children):
        return Placeholder(self._placeholder_name(children[0]), span=self._span(meta))

    # ---- aspects and queries

    def aspect_file(self, meta, rules):
        return list(rules)

    def aspect_rule(self, meta, children):
        query, *items = children
        return AspectRule(
            query=query,
            attachments=tuple(item for item in items if isinstance(item, Attachment)),
            constraints=tuple(item for item in items if isinstance(item, ConstraintRule)),
            span=self._span(meta),
        )

    def query(self, meta, children):
        rule_pattern = children[0] if isinstance(children[0], RulePattern) else None
        metas = tuple(child for child in children if isinstance(child, MetaPattern))
        return Query(rule_pattern, metas, span=self._span(meta))

    def query_text(self, meta, children):
        return children[0]

    def rule_pattern(self, meta, children):
        head, *productions = children
        return RulePattern(str(head), tuple(productions), span=self._span(meta))

    def labelled_production(self, meta, children):
        label, body = children
        return ProductionPattern(body, str(label), span=self._span(meta))

    def plain_production(self, meta, children):
        return ProductionPattern(children[0], span=self._span(meta))

    def pat_expr(self, meta, options):
        if len(options) == 1:
            return options[0]
        return AlternativePattern(tuple(options), span=self._span(meta))

    def pat_seq(self, meta, terms):
        if len(terms) == 1:
            return terms[0]
        return SequencePattern(tuple(terms), span=self._span(meta))

    def pat_term(self, meta, children):
        if len(children) == 1:
            return children[0]
        inner, kind = children
        return IterationPattern(inner, kind, span=self._span(meta))

    def pat_var(self, meta, children):
        return VariablePattern(str(children[0]), span=self._span(meta))

    def pat_capture(self, meta, children):
        name, inner = children
        return CapturePattern(str(name), inner, span=self._span(meta))

    def pat_capture_wild(self, meta, children):
        return WildcardCapturePattern(str(children[0]), span=self._span(meta))

    def pat_wildcard(self, meta, _children):
        return WildcardPattern(span=self._span(meta))

    def pat_literal(self, meta, children):
        return LiteralPattern(unescape_literal(str(children[0])), span=self._span(meta))

    def pat_char_class(self, meta, children):
        return CharClassPattern(children[0].ranges, span=self._span(meta))

    def meta_pattern(self, meta, children):
        var, *predicates = children
        seen: set[str] = set()
        for predicate in predicates:
            if predicate.name in seen:
                raise FrontendError("parse_duplicate_predicate", self._span(meta), var=str(var), name=predicate.name)
            seen.add(predicate.name)
        return MetaPattern(str(var), tuple(predicates), span=self._span(meta))

    def pred_absent(self, meta, children):
        return Absent(str(children[0]))

    def pred_present(self, meta, children):
        return Present(str(children[0]))

    def pred_equals(self, meta, children):
        name, value = children
        return Equals(str(name), value)

    def pred_type(self, meta, children):
        name, kind = children
        return HasType(str(name), kind)

    def type_name(self, meta, children):
        return ValueKind(str(children[0]))

    def attachment(self, meta, children):
        var, *attributes = children
        return Attachment(str(var), tuple(self._annotation_set(meta, attributes)), span=self._span(meta))

    def var_constraint(self, meta, children):
        severity, var, message = children
        return ConstraintRule(severity, self._message(message), target=str(var), span=self._span(meta))

    def nomatch_constraint(self, meta, children):
        severity, message = children
        return ConstraintRule(severity, self._message(message), span=self._span(meta))

    def _message(self, token: Token) -> str:
        # messages may be wrapped over several source lines
        text = _LINE_BREAK_RE.sub(" ", unescape_string(str(token)))
        if not text:
            raise FrontendError("parse_empty_message", self._token_span(token))
        return text

    def severity(self, meta, children):
        (token,) = children
        try:
            return Severity(str(token))
        except ValueError:
            raise FrontendError("parse_unknown_severity", self._token_span(token), name=str(token)) from None

    # ---- metadata values

    def attribute_list(self, meta, attributes):
        return self._annotation_set(meta, attributes)

    def valued_attribute(self, meta, children):
        name, value = children
        return Attribute(str(name), value)

    def flag_attribute(self, meta, children):
        return Attribute(str(children[0]))

    def value_text(self, meta, children):
        return children[0]

    def id_value(self, meta, children):
        return IdentifierVal(str(children[0]))

    def string_value(self, meta, children):
        return StringVal(unescape_string(str(children[0])))

    def int_value(self, meta, children):
        return IntVal(int(str(children[0])))

    def annotation_value(self, meta, attributes):
        return AnnotationVal(self._annotation_set(meta, attributes))

    def seq_value(self, meta, tokens):
        return SequenceVal(tuple(tokens))

    nested_seq = seq_value

    def seq_id(self, meta, children):
        return IdentifierVal(str(children[0]))

    def seq_string(self, meta, children):
        return StringVal(unescape_string(str(children[0])))

    def seq_int(self, meta, children):
        return IntVal(int(str(children[0])))

    def punct(self, meta, children):
        return Punctuation(str(children[0]))

    # ---- templates

    def template_file(self, meta, templates):
        return list(templates)

    def template_decl(self, meta, children):
        kind, name, *rest = children
        return TemplateSyntax(
            result_kind=kind,
            name=str(name),
            params=[item for item in rest if isinstance(item, ParamSyntax)],
            rules=[item for item in rest if isinstance(item, RuleSyntax)],
            span=self._span(meta),
        )

    def template_kind(self, meta, children):
        return TemplateKind(str(children[0]))

    def param(self, meta, children):
        kind, *rest = children
        token = rest[-1]
        return ParamSyntax(kind, str(token)[1:], many=len(rest) == 2, span=self._span(meta))

    def many(self, meta, _children):
        return True
