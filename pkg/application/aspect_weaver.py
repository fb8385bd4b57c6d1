"""Aspect weaving and constraint checking"""
from typing import Optional

from domain import (
    Aspect,
    AspectRule,
    Attribute,
    Binding,
    ConstraintRule,
    Diagnostic,
    Grammar,
    ILogger,
    NodeId,
    Severity,
)
from infrastructure.localization import _
from .query_engine import QueryEngine


class AspectWeaver:
    """Applies aspects to grammars: attachments first, then the rule's constraints"""

    def __init__(self, query_engine: QueryEngine, logger: Optional[ILogger] = None):
        self.query_engine = query_engine
        self.logger = logger

    def apply_aspect(self, aspect: Aspect, grammar: Grammar) -> tuple[Grammar, list[Diagnostic]]:
        """Rules run in file order, each one seeing what the previous ones attached"""
        diagnostics: list[Diagnostic] = []
        attached = 0
        for rule in aspect.rules:
            bindings = self.query_engine.match_query(rule.query, grammar)
            for binding in bindings:
                for attachment in rule.attachments:
                    for node_id in Binding.target_nodes(binding[attachment.var]):
                        for attribute in attachment.attributes:
                            grammar, warning = self._attach(aspect, grammar, node_id, attribute)
                            attached += 1
                            if warning is not None:
                                diagnostics.append(warning)
            if rule.constraints:
                diagnostics.extend(self._check_rule(rule, grammar))
        if self.logger:
            self.logger.debug(_("log_aspect_applied", aspect=aspect.name, count=attached))
        return grammar, diagnostics

    def _attach(self, aspect: Aspect, grammar: Grammar, node_id: NodeId, attribute: Attribute):
        node = grammar.find_node(node_id)
        existing = node.annotations.get(attribute.name)
        warning = None
        if existing is not None and existing != attribute:
            warning = Diagnostic(
                Severity.WARNING,
                _("weave_attribute_replaced", name=attribute.name, node=grammar.node_path(node_id), aspect=aspect.name),
                node.span,
                matched_node=node_id,
            )
        if existing == attribute:
            return grammar, None
        return grammar.attach(node_id, attribute), warning

    def check_constraints(self, aspect: Aspect, grammar: Grammar) -> list[Diagnostic]:
        """Evaluates constraint rules only; attachments are ignored"""
        diagnostics: list[Diagnostic] = []
        for rule in aspect.rules:
            if rule.constraints:
                diagnostics.extend(self._check_rule(rule, grammar))
        return diagnostics

    def _check_rule(self, rule: AspectRule, grammar: Grammar) -> list[Diagnostic]:
        bindings = self.query_engine.match_query(rule.query, grammar)
        diagnostics: list[Diagnostic] = []
        for constraint in rule.constraints:
            if constraint.is_nomatch and not bindings:
                diagnostics.append(Diagnostic(constraint.severity, constraint.message, rule.query.span))
        for binding in bindings:
            for constraint in rule.constraints:
                if not constraint.is_nomatch:
                    diagnostics.append(self._violation(constraint, binding, grammar, rule))
        return diagnostics

    def _violation(self, constraint: ConstraintRule, binding: Binding, grammar: Grammar, rule: AspectRule) -> Diagnostic:
        nodes = Binding.target_nodes(binding[constraint.target])
        if not nodes:
            return Diagnostic(constraint.severity, constraint.message, rule.query.span)
        paths = ", ".join(grammar.node_path(node_id) for node_id in nodes)
        message = _("constraint_violation", message=constraint.message, node=paths)
        return Diagnostic(constraint.severity, message, grammar.find_node(nodes[0]).span, matched_node=nodes[0])
