from .source_span import SourceSpan
from .node_id import NodeId, new_node_id
from .errors import (
    GrammarError,
    UnknownNodeError,
    AmbiguousReferenceError,
    TemplateError,
    FrontendError
)
from .values import (
    ValueKind,
    IdentifierVal,
    StringVal,
    IntVal,
    AnnotationVal,
    SequenceVal,
    Punctuation,
    Value,
    SequenceToken,
    Attribute,
    AnnotationSet
)
from .expressions import (
    Expression,
    Sequence,
    Alternative,
    Iteration,
    IterationKind,
    SymbolRef,
    StringLiteral,
    CharClass,
    Placeholder,
    clone_expression
)
from .template import TemplateKind, Param, TemplateRule, Template, TemplateLibrary, Argument, ImportDecl
from .grammar import Production, Symbol, Namespace, Grammar
from .references import ReferenceProblem, find_reference_problems, reference_diagnostics
from .patterns import (
    PatternExpr,
    SequencePattern,
    AlternativePattern,
    IterationPattern,
    VariablePattern,
    LiteralPattern,
    CharClassPattern,
    CapturePattern,
    WildcardCapturePattern,
    WildcardPattern,
    ProductionPattern,
    RulePattern,
    Present,
    Absent,
    Equals,
    HasType,
    Predicate,
    MetaPattern,
    Query,
    NodeRun,
    Target,
    Binding
)
from .diagnostic import Severity, Diagnostic, ParseResult, has_errors
from .aspect import Attachment, ConstraintRule, AspectRule, Aspect
from .bnf import TokenDecl, BnfTerm, BnfAlternative, BnfRule, BnfGrammar
from .export_result import ExportResult
from .interfaces import (
    IGrammarParser,
    IGrammarPrinter,
    IGrammarBackend,
    ISourceRepository,
    ILogger
)

__all__ = [
    'SourceSpan', 'NodeId', 'new_node_id',
    'GrammarError', 'UnknownNodeError', 'AmbiguousReferenceError', 'TemplateError', 'FrontendError',
    'ValueKind', 'IdentifierVal', 'StringVal', 'IntVal', 'AnnotationVal', 'SequenceVal', 'Punctuation',
    'Value', 'SequenceToken', 'Attribute', 'AnnotationSet',
    'Expression', 'Sequence', 'Alternative', 'Iteration', 'IterationKind', 'SymbolRef',
    'StringLiteral', 'CharClass', 'Placeholder', 'clone_expression',
    'TemplateKind', 'Param', 'TemplateRule', 'Template', 'TemplateLibrary', 'Argument', 'ImportDecl',
    'Production', 'Symbol', 'Namespace', 'Grammar',
    'ReferenceProblem', 'find_reference_problems', 'reference_diagnostics',
    'PatternExpr', 'SequencePattern', 'AlternativePattern', 'IterationPattern', 'VariablePattern',
    'LiteralPattern', 'CharClassPattern', 'CapturePattern', 'WildcardCapturePattern', 'WildcardPattern',
    'ProductionPattern', 'RulePattern', 'Present', 'Absent', 'Equals', 'HasType', 'Predicate',
    'MetaPattern', 'Query', 'NodeRun', 'Target', 'Binding',
    'Severity', 'Diagnostic', 'ParseResult', 'has_errors',
    'Attachment', 'ConstraintRule', 'AspectRule', 'Aspect',
    'TokenDecl', 'BnfTerm', 'BnfAlternative', 'BnfRule', 'BnfGrammar',
    'ExportResult',
    'IGrammarParser', 'IGrammarPrinter', 'IGrammarBackend', 'ISourceRepository', 'ILogger'
]
