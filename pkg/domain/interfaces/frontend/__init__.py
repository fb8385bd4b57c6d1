from .i_grammar_parser import IGrammarParser
from .i_grammar_printer import IGrammarPrinter

__all__ = ['IGrammarParser', 'IGrammarPrinter']
