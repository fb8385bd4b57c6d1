"""Source and output file access"""
import os
import sys
from typing import Optional

from domain import ISourceRepository


class SourceFileRepository(ISourceRepository):
    """Reads grammar sources and writes command output, UTF-8 throughout"""

    def read_text(self, path: str) -> str:
        """Reads a source file; OSError propagates to the caller"""
        with open(path, "r", encoding="utf-8") as f:
            return f.read()

    def write_text(self, path: Optional[str], text: str) -> None:
        """Writes to `path`, creating its directory, or to stdout when path is None"""
        if path is None:
            sys.stdout.write(text)
            return
        directory = os.path.dirname(path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
