"""Metadata values, attributes and annotation sets"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Iterator, Optional, Union

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
PUNCTUATION_RE = re.compile(r"[^\sA-Za-z0-9_\"]")


def is_identifier(text: str) -> bool:
    return IDENTIFIER_RE.fullmatch(text) is not None


class ValueKind(str, Enum):
    """The five predefined attribute value types, spelled as in queries"""
    ID = "ID"
    STRING = "STRING"
    INT = "INT"
    ANNOTATION = "Annotation"
    SEQUENCE = "Sequence"


@dataclass(frozen=True)
class IdentifierVal:
    name: str
    kind: ClassVar[ValueKind] = ValueKind.ID

    def __post_init__(self):
        if not is_identifier(self.name):
            raise ValueError(f"'{self.name}' is not an identifier")


@dataclass(frozen=True)
class StringVal:
    text: str
    kind: ClassVar[ValueKind] = ValueKind.STRING


@dataclass(frozen=True)
class IntVal:
    value: int
    kind: ClassVar[ValueKind] = ValueKind.INT


@dataclass(frozen=True)
class AnnotationVal:
    annotations: "AnnotationSet"
    kind: ClassVar[ValueKind] = ValueKind.ANNOTATION


@dataclass(frozen=True)
class Punctuation:
    """A single punctuation character inside a sequence value"""
    char: str

    def __post_init__(self):
        if PUNCTUATION_RE.fullmatch(self.char) is None:
            raise ValueError(f"'{self.char}' is not a punctuation character")


@dataclass(frozen=True)
class SequenceVal:
    tokens: tuple["SequenceToken", ...] = ()
    kind: ClassVar[ValueKind] = ValueKind.SEQUENCE


Value = Union[IdentifierVal, StringVal, IntVal, AnnotationVal, SequenceVal]
SequenceToken = Union[Value, Punctuation]


@dataclass(frozen=True)
class Attribute:
    """Entity: name-value pair; flag attributes carry no value"""
    name: str
    value: Optional[Value] = None

    def __post_init__(self):
        if not is_identifier(self.name):
            raise ValueError(f"'{self.name}' is not a valid attribute name")

    @property
    def is_flag(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class AnnotationSet:
    """Entity: ordered attributes with unique names"""
    attributes: tuple[Attribute, ...] = ()

    def __post_init__(self):
        names = [attribute.name for attribute in self.attributes]
        if len(names) != len(set(names)):
            raise ValueError(f"Duplicate attribute names in {names}")

    def __iter__(self) -> Iterator[Attribute]:
        return iter(self.attributes)

    def __len__(self) -> int:
        return len(self.attributes)

    def __contains__(self, name: object) -> bool:
        return any(attribute.name == name for attribute in self.attributes)

    def get(self, name: str) -> Optional[Attribute]:
        for attribute in self.attributes:
            if attribute.name == name:
                return attribute
        return None

    def with_attribute(self, attribute: Attribute) -> "AnnotationSet":
        """Replaces a same-named attribute in place, otherwise appends"""
        if attribute.name not in self:
            return AnnotationSet(self.attributes + (attribute,))
        return AnnotationSet(tuple(
            attribute if existing.name == attribute.name else existing
            for existing in self.attributes
        ))
