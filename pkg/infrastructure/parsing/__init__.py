"""Frontend: lark parser and canonical printer"""
from .lark_grammar_parser import LarkGrammarParser
from .grammar_printer import GrammarPrinter

__all__ = ['LarkGrammarParser', 'GrammarPrinter']
