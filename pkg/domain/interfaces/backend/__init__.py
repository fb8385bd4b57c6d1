from .i_grammar_backend import IGrammarBackend

__all__ = ['IGrammarBackend']
