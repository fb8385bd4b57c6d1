from .frontend import IGrammarParser, IGrammarPrinter
from .backend import IGrammarBackend
from .storage import ISourceRepository
from .infrastructure import ILogger

__all__ = [
    'IGrammarParser',
    'IGrammarPrinter',
    'IGrammarBackend',
    'ISourceRepository',
    'ILogger'
]
