"""Shared fixtures"""
import pytest

from application import AspectWeaver, QueryEngine, TemplateEngine
from infrastructure.backends import YaccBackend
from infrastructure.localization import i18n
from infrastructure.parsing import GrammarPrinter, LarkGrammarParser


@pytest.fixture(autouse=True)
def english_messages():
    i18n.load_language("en")
    yield
    i18n.load_language("en")


@pytest.fixture
def parser():
    return LarkGrammarParser()


@pytest.fixture
def lenient_parser():
    return LarkGrammarParser(allow_undefined_symbols=True)


@pytest.fixture
def printer():
    return GrammarPrinter()


@pytest.fixture
def query_engine():
    return QueryEngine()


@pytest.fixture
def weaver(query_engine):
    return AspectWeaver(query_engine)


@pytest.fixture
def template_engine():
    return TemplateEngine(allow_undefined_symbols=True)


@pytest.fixture
def yacc_backend():
    return YaccBackend()


@pytest.fixture
def parse(parser):
    """Parses grammar text that is expected to be valid"""
    def _parse(text: str, file_name: str = "test.grammar"):
        result = parser.parse_grammar(text, file_name)
        assert result.ok, [d.format() for d in result.diagnostics]
        return result.value
    return _parse


@pytest.fixture
def parse_aspect(parser):
    def _parse(text: str, file_name: str = "test.aspect"):
        result = parser.parse_aspect(text, file_name)
        assert result.ok, [d.format() for d in result.diagnostics]
        return result.value
    return _parse


@pytest.fixture
def parse_query(parser):
    def _parse(text: str, file_name: str = "test.query"):
        result = parser.parse_query(text, file_name)
        assert result.ok, [d.format() for d in result.diagnostics]
        return result.value
    return _parse
