from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Entity: Location of a node or diagnostic in a source file"""
    file_name: str
    start: int
    end: int
    line: int
    column: int

    def __post_init__(self):
        """Validates data"""
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"Invalid span offsets {self.start}..{self.end}")
        if self.line < 1 or self.column < 1:
            raise ValueError("Line and column are 1-based")

    def __str__(self) -> str:
        return f"{self.file_name}:{self.line}:{self.column}"
