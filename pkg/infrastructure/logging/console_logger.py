"""Infrastructure: console logging on stderr"""
from typing import Optional

from rich.console import Console

from domain import ILogger


class ConsoleLogger(ILogger):
    """
    Console logging implementation.
    Everything goes to stderr so stdout stays reserved for command output;
    info and debug lines only appear in verbose mode.
    """

    def __init__(self, verbose: bool = False, console: Optional[Console] = None):
        self.verbose = verbose
        self.console = console or Console(stderr=True, soft_wrap=True, highlight=False)

    def _emit(self, message: str, style: Optional[str] = None) -> None:
        # messages carry grammar text; brackets must not be read as markup
        self.console.print(message, style=style, markup=False)

    def info(self, message: str) -> None:
        if self.verbose:
            self._emit(message)

    def debug(self, message: str) -> None:
        if self.verbose:
            self._emit(message, style="dim")

    def error(self, message: str) -> None:
        self._emit(message, style="bold red")

    def warning(self, message: str) -> None:
        self._emit(message, style="yellow")
