"""Aspects: query-keyed attachment and constraint rules"""
from dataclasses import dataclass, field
from typing import Optional

from .diagnostic import Severity
from .patterns import Query
from .source_span import SourceSpan
from .values import Attribute


@dataclass(frozen=True)
class Attachment:
    """`Var { attr; attr = value; };`"""
    var: str
    attributes: tuple[Attribute, ...]
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class ConstraintRule:
    """`error on N : "msg";` or `warning on nomatch : "msg";` (target None)"""
    severity: Severity
    message: str
    target: Optional[str] = None
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        """Validates data"""
        if not self.message:
            raise ValueError("Constraint message cannot be empty")

    @property
    def is_nomatch(self) -> bool:
        return self.target is None


@dataclass(frozen=True)
class AspectRule:
    query: Query
    attachments: tuple[Attachment, ...] = ()
    constraints: tuple[ConstraintRule, ...] = ()
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    def unbound_uses(self) -> list[tuple[str, Optional[SourceSpan]]]:
        """(variable, span) of every attachment or constraint naming a variable the query does not bind"""
        bound = set(self.query.variables())
        uses = [(a.var, a.span) for a in self.attachments]
        uses += [(c.target, c.span) for c in self.constraints if c.target is not None]
        return [(name, span) for name, span in uses if name not in bound]


@dataclass(frozen=True)
class Aspect:
    """Entity: ordered rules, named after the file they came from"""
    name: str
    rules: tuple[AspectRule, ...] = ()
