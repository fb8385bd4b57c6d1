"""Grammar templates, parameters and import declarations"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

from .expressions import Expression
from .source_span import SourceSpan


class TemplateKind(str, Enum):
    SYMBOL = "Symbol"
    PRODUCTION = "Production"
    EXPRESSION = "Expression"
    ID = "ID"


@dataclass(frozen=True)
class Param:
    """Entity: `Kind[*] $name` template parameter"""
    kind: TemplateKind
    name: str
    many: bool = False
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """Validates data"""
        if self.many and self.kind is not TemplateKind.PRODUCTION:
            raise ValueError("Only Production parameters may be repeated")


@dataclass(frozen=True)
class TemplateRule:
    """A rule of a template body; the head may be a `$name` placeholder"""
    head: str
    productions: tuple[Expression, ...]
    head_is_placeholder: bool = False
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.productions:
            raise ValueError(f"Template rule '{self.head}' has no productions")


@dataclass(frozen=True)
class Template:
    """Entity: parameterized rule set"""
    result_kind: TemplateKind
    name: str
    params: tuple[Param, ...]
    body: tuple[TemplateRule, ...] = ()
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """Validates data"""
        names = [param.name for param in self.params]
        if len(names) != len(set(names)):
            raise ValueError(f"Template '{self.name}' repeats a parameter name")


@dataclass(frozen=True)
class TemplateLibrary:
    """Entity: template name -> Template, in declaration order"""
    templates: Mapping[str, Template] = field(default_factory=dict)

    def __contains__(self, name: object) -> bool:
        return name in self.templates

    def __len__(self) -> int:
        return len(self.templates)

    def get(self, name: str) -> Optional[Template]:
        return self.templates.get(name)

    def merged(self, other: "TemplateLibrary") -> "TemplateLibrary":
        """Later libraries win on name collision"""
        return TemplateLibrary({**self.templates, **other.templates})


@dataclass(frozen=True)
class Argument:
    """
    Import argument: one expression, a `||`-separated production list,
    or no production at all (the `empty` keyword)
    """
    productions: tuple[Expression, ...]
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    @property
    def is_single(self) -> bool:
        return len(self.productions) == 1


@dataclass(frozen=True)
class ImportDecl:
    """Entity: `import [alias =] template<args>;`"""
    template_name: str
    args: tuple[Argument, ...]
    alias: Optional[str] = None
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)
