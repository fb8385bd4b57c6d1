import pytest

from domain import (
    AnnotationSet,
    Attribute,
    Binding,
    CharClass,
    Grammar,
    IdentifierVal,
    IntVal,
    Iteration,
    IterationKind,
    Namespace,
    NodeRun,
    Production,
    Sequence,
    StringLiteral,
    StringVal,
    Symbol,
    SymbolRef,
    UnknownNodeError,
    AmbiguousReferenceError,
    Severity,
    find_reference_problems,
    reference_diagnostics,
    new_node_id,
)
from tests.grammar_factory import read_fixture


def _symbol(name, *bodies):
    return Symbol(name, tuple(Production(body) for body in bodies))


class TestEntities:
    def test_symbol_needs_productions(self):
        with pytest.raises(ValueError):
            Symbol("A", ())

    def test_sequence_needs_two_terms(self):
        with pytest.raises(ValueError):
            Sequence((SymbolRef("A"),))

    def test_char_class_rejects_reversed_range(self):
        with pytest.raises(ValueError):
            CharClass((("9", "0"),))

    def test_empty_literal_is_rejected(self):
        with pytest.raises(ValueError):
            StringLiteral("")

    def test_annotation_names_are_unique(self):
        with pytest.raises(ValueError):
            AnnotationSet((Attribute("a"), Attribute("a", IntVal(1))))

    def test_duplicate_root_symbols_are_rejected(self):
        with pytest.raises(ValueError):
            Grammar((_symbol("A", StringLiteral("x")), _symbol("A", StringLiteral("y"))))

    def test_structural_equality_ignores_ids(self):
        first = _symbol("A", Sequence((SymbolRef("B"), StringLiteral("x"))))
        second = _symbol("A", Sequence((SymbolRef("B"), StringLiteral("x"))))
        assert first.id != second.id
        assert first == second


class TestResolveSymbol:
    def test_root_symbol(self, lenient_parser):
        grammar = lenient_parser.parse_grammar(read_fixture("factor.grammar"), "factor.grammar").value
        assert grammar.resolve_symbol("Factor") is grammar.symbols[0]

    def test_qualified_name_looks_inside_namespace(self):
        product_sign = _symbol("Sign", StringLiteral("*"))
        sum_sign = _symbol("Sign", StringLiteral("+"))
        grammar = Grammar(namespaces=(
            Namespace("product", (product_sign,)),
            Namespace("sum", (sum_sign,)),
        ))
        assert grammar.resolve_symbol("product.Sign") is product_sign
        assert grammar.resolve_symbol("sum.Sign") is sum_sign
        assert grammar.resolve_symbol("other.Sign") is None

    def test_unqualified_name_in_two_namespaces_is_ambiguous(self):
        grammar = Grammar(namespaces=(
            Namespace("a", (_symbol("Sign", StringLiteral("*")),)),
            Namespace("b", (_symbol("Sign", StringLiteral("+")),)),
        ))
        with pytest.raises(AmbiguousReferenceError):
            grammar.resolve_symbol("Sign")
        assert grammar.resolve_symbol("Sign", scope="b").productions[0].body == StringLiteral("+")

    def test_root_wins_over_namespaces(self):
        root = _symbol("Sign", StringLiteral("-"))
        grammar = Grammar((root,), namespaces=(Namespace("a", (_symbol("Sign", StringLiteral("*")),)),))
        assert grammar.resolve_symbol("Sign") is root

    def test_empty_grammar(self):
        assert Grammar().resolve_symbol("X") is None


class TestWalk:
    def test_single_rule_node_count(self, parse):
        grammar = parse("INT -> ['0'--'9']+ ;")
        nodes = list(grammar.walk())
        assert len(nodes) == 5
        assert nodes[0] is grammar
        assert isinstance(nodes[3], Iteration)
        assert isinstance(nodes[4], CharClass)

    def test_empty_grammar_walk(self):
        grammar = Grammar()
        assert list(grammar.walk()) == [grammar]

    def test_pre_order_and_unique_ids(self, parse):
        grammar = parse(read_fixture("lexical.grammar"))
        nodes = list(grammar.walk())
        ids = [node.id for node in nodes]
        assert len(ids) == len(set(ids))
        sequence = next(node for node in nodes if isinstance(node, Sequence))
        assert ids.index(sequence.id) < ids.index(sequence.terms[0].id)

    def test_walk_is_stable(self, parse):
        grammar = parse(read_fixture("lexical.grammar"))
        assert [n.id for n in grammar.walk()] == [n.id for n in grammar.walk()]

    def test_node_paths(self, parse):
        grammar = parse("A -> 'x' || B 'y' ; B -> 'z' ;")
        paths = [path for path, _node in grammar.iter_paths()]
        assert paths == [
            "@grammar",
            "A",
            "A/production[0]",
            "A/production[0]/expr[0]",
            "A/production[1]",
            "A/production[1]/expr[0]",
            "A/production[1]/expr[0.0]",
            "A/production[1]/expr[0.1]",
            "B",
            "B/production[0]",
            "B/production[0]/expr[0]",
        ]


class TestAttach:
    def test_attach_flag(self, parse):
        grammar = parse("Expr -> Expr '+' 'x' || 'x' ;")
        symbol = grammar.symbols[0]
        updated = grammar.attach(symbol.id, Attribute("leftRecursive"))
        assert "leftRecursive" in updated.symbols[0].annotations
        assert updated.symbols[0].id == symbol.id
        assert "leftRecursive" not in grammar.symbols[0].annotations

    def test_second_value_wins(self, parse):
        grammar = parse("A -> 'x' ;")
        target = grammar.symbols[0].id
        grammar = grammar.attach(target, Attribute("kind", IdentifierVal("first")))
        grammar = grammar.attach(target, Attribute("kind", IdentifierVal("second")))
        annotations = grammar.symbols[0].annotations
        assert len(annotations) == 1
        assert annotations.get("kind").value == IdentifierVal("second")

    def test_attach_is_idempotent(self, parse):
        grammar = parse("A -> 'x' ;")
        target = grammar.symbols[0].productions[0].id
        once = grammar.attach(target, Attribute("action", StringVal("$$ = 1;")))
        twice = once.attach(target, Attribute("action", StringVal("$$ = 1;")))
        assert once == twice

    def test_new_names_are_appended(self, parse):
        grammar = parse("A -> 'x' ;")
        target = grammar.symbols[0].id
        for name in ("c", "a", "b"):
            grammar = grammar.attach(target, Attribute(name))
        assert [a.name for a in grammar.symbols[0].annotations] == ["c", "a", "b"]

    def test_attach_to_subexpression(self, parse):
        grammar = parse("A -> B ('x' B)* ; B -> 'b' ;")
        iteration = grammar.symbols[0].productions[0].body.terms[1]
        updated = grammar.attach(iteration.id, Attribute("hot"))
        assert "hot" in updated.find_node(iteration.id).annotations

    def test_attach_to_grammar(self, parse):
        grammar = parse("A -> 'x' ;")
        updated = grammar.attach(grammar.id, Attribute("name", IdentifierVal("demo")))
        assert updated.annotations.get("name").value == IdentifierVal("demo")

    def test_unknown_node(self, parse):
        grammar = parse("A -> 'x' ;")
        with pytest.raises(UnknownNodeError):
            grammar.attach(new_node_id(), Attribute("x"))


class TestReferences:
    def test_unresolved_references_are_reported(self):
        grammar = Grammar((_symbol("A", Sequence((SymbolRef("B"), SymbolRef("A")))),))
        problems = find_reference_problems(grammar)
        assert [p.ref.name for p in problems] == ["B"]
        assert not problems[0].is_ambiguous

    def test_reference_diagnostics_use_the_given_translation(self):
        grammar = Grammar((_symbol("A", Sequence((SymbolRef("B"), SymbolRef("C")))),))
        translate = lambda key, **details: f"{key}:{details['name']}"

        strict = reference_diagnostics(grammar, translate)
        lenient = reference_diagnostics(grammar, translate, allow_undefined=True)

        assert [d.message for d in strict] == ["parse_undefined_symbol:B", "parse_undefined_symbol:C"]
        assert {d.severity for d in strict} == {Severity.ERROR}
        assert {d.severity for d in lenient} == {Severity.WARNING}

    def test_ambiguity_stays_an_error(self):
        grammar = Grammar(
            (_symbol("A", SymbolRef("X")),),
            namespaces=(Namespace("p", (_symbol("X", StringLiteral("p")),)), Namespace("q", (_symbol("X", StringLiteral("q")),))),
        )
        (diagnostic,) = reference_diagnostics(grammar, lambda key, **details: key, allow_undefined=True)
        assert diagnostic.severity is Severity.ERROR
        assert diagnostic.message == "parse_ambiguous_symbol"


class TestBinding:
    def test_conflicting_bind_fails(self):
        first, second = new_node_id(), new_node_id()
        binding = Binding().bind("X", first)
        assert binding.bind("X", first) is binding
        assert binding.bind("X", second) is None

    def test_target_nodes(self):
        a, b = new_node_id(), new_node_id()
        assert Binding.target_nodes(a) == (a,)
        assert Binding.target_nodes(NodeRun((a, b))) == (a, b)
        assert Binding.target_nodes(NodeRun(())) == ()

    def test_hashable_and_order_independent(self):
        a, b = new_node_id(), new_node_id()
        assert Binding({"X": a, "Y": b}) == Binding({"Y": b, "X": a})
        assert len({Binding({"X": a, "Y": b}), Binding({"Y": b, "X": a})}) == 1


def test_iteration_kinds_are_source_spelling():
    assert [kind.value for kind in IterationKind] == ["*", "+", "?"]
