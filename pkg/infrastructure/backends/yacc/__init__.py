from .symbol_classifier import SymbolClassification, SymbolClassifier
from .ebnf_lowering import EbnfLowering
from .yacc_emitter import YaccEmitter
from .yacc_backend import YaccBackend

__all__ = ['SymbolClassification', 'SymbolClassifier', 'EbnfLowering', 'YaccEmitter', 'YaccBackend']
