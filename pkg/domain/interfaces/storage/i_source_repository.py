from abc import ABC, abstractmethod
from typing import Optional


class ISourceRepository(ABC):
    """Source and output file access"""
    @abstractmethod
    def read_text(self, path: str) -> str:
        """Reads a UTF-8 file; raises OSError on failure"""
        pass

    @abstractmethod
    def write_text(self, path: Optional[str], text: str) -> None:
        """Writes UTF-8 text; a missing path means standard output"""
        pass
