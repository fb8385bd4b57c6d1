"""Grammar -> Yacc export"""
from typing import Optional

from domain import BnfGrammar, Diagnostic, ExportResult, Grammar, IGrammarBackend, ILogger, has_errors
from infrastructure.localization import _
from .ebnf_lowering import EbnfLowering
from .symbol_classifier import SymbolClassification, SymbolClassifier
from .yacc_emitter import YaccEmitter


class YaccBackend(IGrammarBackend):
    """classify -> lower -> emit, stopping at the first stage that reports errors"""

    def __init__(
        self,
        lexical_attribute: str = "lexical",
        start_attribute: str = "start",
        action_attribute: str = "action",
        epsilon_comment: str = "/* empty */",
        logger: Optional[ILogger] = None,
    ):
        self.classifier = SymbolClassifier(lexical_attribute)
        self.start_attribute = start_attribute
        self.action_attribute = action_attribute
        self.emitter = YaccEmitter(epsilon_comment)
        self.logger = logger

    @property
    def name(self) -> str:
        return "yacc"

    @property
    def file_suffix(self) -> str:
        return ".y"

    def classify_symbols(self, grammar: Grammar) -> tuple[SymbolClassification, list[Diagnostic]]:
        return self.classifier.classify(grammar)

    def lower_ebnf(self, grammar: Grammar, classification: Optional[SymbolClassification] = None):
        if classification is None:
            classification, _diagnostics = self.classify_symbols(grammar)
        lowering = EbnfLowering(classification, self.action_attribute, self.start_attribute)
        return lowering.lower(grammar)

    def emit_yacc(self, bnf: BnfGrammar) -> str:
        return self.emitter.emit(bnf)

    def export(self, grammar: Grammar) -> ExportResult:
        classification, diagnostics = self.classify_symbols(grammar)
        if has_errors(diagnostics):
            return ExportResult(None, tuple(diagnostics))
        bnf, lowering_diagnostics = self.lower_ebnf(grammar, classification)
        diagnostics.extend(lowering_diagnostics)
        if bnf is None or has_errors(diagnostics):
            return ExportResult(None, tuple(diagnostics))
        if self.logger:
            self.logger.debug(_("log_yacc_lowered", rules=len(bnf.rules), tokens=len(bnf.tokens)))
        return ExportResult(self.emit_yacc(bnf), tuple(diagnostics))
