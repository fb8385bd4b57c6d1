import pytest

from domain import (
    AnnotationSet,
    Attribute,
    Equals,
    HasType,
    IdentifierVal,
    IntVal,
    MetaPattern,
    NodeRun,
    Present,
    Query,
    StringVal,
    ValueKind,
)
from tests.grammar_factory import read_fixture


def _ids(grammar, *names):
    return [grammar.resolve_symbol(name).id for name in names]


class TestRulePatterns:
    def test_binary_operation_query(self, parse, parse_query, query_engine):
        grammar = parse(read_fixture("binary_operations.grammar"))
        query = parse_query(read_fixture("binary_operation.query"))

        bindings = query_engine.match_query(query, grammar)

        product, sum_, factor, mult, plus = _ids(grammar, "Product", "Sum", "Factor", "MultOrDiv", "PlusOrMinus")
        assert [dict(b) for b in bindings] == [
            {"Op": product, "Arg": factor, "Sign": mult},
            {"Op": sum_, "Arg": product, "Sign": plus},
        ]

    def test_repeated_variable_must_bind_the_same_symbol(self, parse, parse_query, query_engine):
        grammar = parse("Mixed -> A (S B)* ; A -> 'a' ; B -> 'b' ; S -> '+' ;")
        query = parse_query(read_fixture("binary_operation.query"))
        assert query_engine.match_query(query, grammar) == []

    def test_alternative_capture(self, parse, parse_query, query_engine):
        grammar = parse("X -> Y | Z ; Y -> 'y' ; Z -> 'z' ;")
        query = parse_query(read_fixture("alternative_capture.query"))

        (binding,) = query_engine.match_query(query, grammar)

        x, y, z = _ids(grammar, "X", "Y", "Z")
        assert binding["A"] == x
        assert binding["B"] == y
        assert binding["C"] == z
        assert binding["Alt"] == grammar.symbols[0].productions[0].body.id

    def test_left_recursion(self, parse, parse_query, query_engine):
        grammar = parse("E -> E '+' T || T ; T -> T '*' 'x' || 'x' ; F -> '(' F ')' ;")
        query = parse_query(read_fixture("left_recursion.query"))

        bindings = query_engine.match_query(query, grammar)

        assert [b["Rec"] for b in bindings] == _ids(grammar, "E", "T")

    def test_rest_capture_binds_a_run(self, parse, parse_query, query_engine):
        grammar = parse("E -> E '+' T ; T -> T 'x' ;")
        query = parse_query(read_fixture("left_recursion_rest.query"))

        first, second = query_engine.match_query(query, grammar)

        plus, t_ref = grammar.symbols[0].productions[0].body.terms[1:]
        assert first["Rest"] == NodeRun((plus.id, t_ref.id))
        assert second["Rest"] == grammar.symbols[1].productions[0].body.terms[1].id

    def test_empty_rest(self, lenient_parser, parse_query, query_engine):
        grammar = lenient_parser.parse_grammar("E -> E ;", "loop.grammar").value
        query = parse_query(read_fixture("left_recursion_rest.query"))
        (binding,) = query_engine.match_query(query, grammar)
        assert binding["Rest"] == NodeRun(())

    def test_external_reference_binds_the_reference(self, lenient_parser, parse_query, query_engine):
        grammar = lenient_parser.parse_grammar("E -> Missing 'x' ;", "missing.grammar").value
        (binding,) = query_engine.match_query(parse_query("H -> V 'x' ;"), grammar)
        assert binding["V"] == grammar.symbols[0].productions[0].body.terms[0].id

    def test_external_symbols_in_binary_operation(self, lenient_parser, parse_query, query_engine):
        text = "Product -> Factor (MultOrDiv Factor)* ;"
        grammar = lenient_parser.parse_grammar(text, "product.grammar").value
        query = parse_query(read_fixture("binary_operation.query"))

        (binding,) = query_engine.match_query(query, grammar)

        factor, group = grammar.symbols[0].productions[0].body.terms
        mult_or_div = group.inner.terms[0]
        assert dict(binding) == {"Op": grammar.symbols[0].id, "Arg": factor.id, "Sign": mult_or_div.id}

    def test_repeated_variable_over_different_external_names(self, lenient_parser, parse_query, query_engine):
        grammar = lenient_parser.parse_grammar("Mixed -> A1x (Sx B1x)* ;", "mixed.grammar").value
        query = parse_query(read_fixture("binary_operation.query"))
        assert query_engine.match_query(query, grammar) == []

    def test_literal_and_char_class(self, parse, parse_query, query_engine):
        grammar = parse("Number -> ['0'--'9']+ '.' ['0'--'9']+ ; Name -> ['a'--'z']+ ;")
        query = parse_query("N -> ['0'--'9']+ '.' .. ;")
        bindings = query_engine.match_query(query, grammar)
        assert [b["N"] for b in bindings] == _ids(grammar, "Number")

    def test_iteration_kind_must_agree(self, parse, parse_query, query_engine):
        grammar = parse("L -> I* ; I -> 'i' ;")
        assert query_engine.match_query(parse_query("H -> X+ ;"), grammar) == []
        assert len(query_engine.match_query(parse_query("H -> X* ;"), grammar)) == 1

    def test_namespace_symbols_are_searched(self, parse, parse_query, query_engine, template_engine, parser):
        library = parser.parse_templates(read_fixture("binary_operation_sign.templates"), "sign.templates").value
        text = read_fixture("any_sign.grammar") + "Factor -> 'f' ;\n"
        grammar = template_engine.resolve_imports(parse(text), library).value
        query = parse_query("Op -> Arg (Sign Arg)* ;")

        bindings = query_engine.match_query(query, grammar)

        product, sum_ = grammar.namespaces
        assert [dict(b) for b in bindings] == [
            {"Op": product.get("Product").id, "Arg": grammar.symbols[1].id, "Sign": product.get("Sign").id},
            {"Op": sum_.get("Sum").id, "Arg": product.get("Product").id, "Sign": sum_.get("Sign").id},
        ]


class TestProductionPatterns:
    def test_labels_bind_productions(self, parse, parse_query, query_engine):
        grammar = parse("S -> S '+' N || N ; N -> 'n' ;")
        (binding,) = query_engine.match_query(parse_query("S -> P: S '+' R ;"), grammar)
        assert binding["P"] == grammar.symbols[0].productions[0].id

    def test_each_pattern_takes_a_distinct_production(self, parse, parse_query, query_engine):
        grammar = parse("A -> 'x' ; B -> 'x' || 'x' ;")
        query = parse_query("H -> P: 'x' || Q: 'x' ;")

        bindings = query_engine.match_query(query, grammar)

        first, second = grammar.symbols[1].productions
        assert {(b["P"], b["Q"]) for b in bindings} == {(first.id, second.id), (second.id, first.id)}

    def test_productions_may_match_in_any_order(self, parse, parse_query, query_engine):
        grammar = parse("A -> 'y' || 'x' ;")
        assert len(query_engine.match_query(parse_query("H -> 'x' || 'y' ;"), grammar)) == 1


class TestMetaPatterns:
    @pytest.fixture
    def annotated(self, parse):
        grammar = parse("N -> 'n' ; M -> 'm' ; K -> 'k' ;")
        n, m, k = (symbol.id for symbol in grammar.symbols)
        for attribute in (
            Attribute("type", IdentifierVal("Nonterminal")),
            Attribute("operation"),
            Attribute("associativity", IdentifierVal("left")),
        ):
            grammar = grammar.attach(n, attribute)
        grammar = grammar.attach(m, Attribute("type", IdentifierVal("Nonterminal")))
        grammar = grammar.attach(m, Attribute("operation"))
        grammar = grammar.attach(m, Attribute("associativity", StringVal("left")))
        grammar = grammar.attach(k, Attribute("type", IdentifierVal("Nonterminal")))
        grammar = grammar.attach(k, Attribute("operation"))
        grammar = grammar.attach(k, Attribute("associativity", IdentifierVal("right")))
        grammar = grammar.attach(k, Attribute("commutative"))
        return grammar

    def test_metadata_query(self, annotated, parse_query, query_engine):
        query = parse_query(read_fixture("metadata.query"))
        bindings = query_engine.match_query(query, annotated)
        assert [b["N"] for b in bindings] == [annotated.symbols[0].id]

    def test_free_meta_variable_ranges_over_symbols(self, annotated, query_engine):
        query = Query(meta_patterns=(MetaPattern("X", (Present("operation"),)),))
        bindings = query_engine.match_query(query, annotated)
        assert [b["X"] for b in bindings] == [symbol.id for symbol in annotated.symbols]

    def test_rule_and_meta_patterns_share_variables(self, parse, parse_query, query_engine):
        grammar = parse("E -> E '+' 'x' || 'x' ; T -> T '*' 'x' || 'x' ;")
        grammar = grammar.attach(grammar.symbols[1].id, Attribute("hot"))
        query = parse_query("Rec -> Rec .. ; Rec { hot; }")
        bindings = query_engine.match_query(query, grammar)
        assert [b["Rec"] for b in bindings] == [grammar.symbols[1].id]

    @pytest.mark.parametrize("predicate, expected", [
        (Equals("level", IntVal(3)), True),
        (Equals("level", IntVal(4)), False),
        (Equals("flag", IntVal(3)), False),
        (HasType("level", ValueKind.INT), True),
        (HasType("level", ValueKind.STRING), False),
        (HasType("flag", ValueKind.ID), False),
        (HasType("missing", ValueKind.ID), False),
    ])
    def test_predicates(self, query_engine, predicate, expected):
        annotations = AnnotationSet((Attribute("level", IntVal(3)), Attribute("flag")))
        assert query_engine.eval_predicate(predicate, annotations) is expected

    def test_run_targets_never_satisfy_meta_patterns(self, parse, parse_query, query_engine):
        grammar = parse("E -> E 'a' 'b' ;")
        query = parse_query("Rec -> Rec Rest=.. ; Rest { }")
        assert query_engine.match_query(query, grammar) == []


def test_results_are_distinct_and_deterministic(parse, parse_query, query_engine):
    grammar = parse("A -> 'x' 'x' 'x' ;")
    query = parse_query("H -> .. 'x' .. ;")
    first = query_engine.match_query(query, grammar)
    assert len(first) == 1
    assert first == query_engine.match_query(query, grammar)
