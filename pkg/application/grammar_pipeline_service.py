"""Grammar processing pipeline shared by every command"""
from typing import Iterable, Optional, Sequence as Seq

from domain import (
    Aspect,
    Binding,
    Diagnostic,
    ExportResult,
    Grammar,
    IGrammarBackend,
    IGrammarParser,
    IGrammarPrinter,
    ILogger,
    ISourceRepository,
    NodeRun,
    ParseResult,
    Query,
    Severity,
    Target,
    TemplateLibrary,
    has_errors,
)
from infrastructure.localization import _
from .aspect_weaver import AspectWeaver
from .query_engine import QueryEngine
from .template_engine import TemplateEngine


class GrammarPipelineService:
    """
    parse -> resolve imports -> flatten -> weave aspects (in the given order).
    Reading failures raise OSError; everything else comes back as diagnostics.
    """

    def __init__(
        self,
        parser: IGrammarParser,
        printer: IGrammarPrinter,
        template_engine: TemplateEngine,
        weaver: AspectWeaver,
        query_engine: QueryEngine,
        repository: ISourceRepository,
        backends: Optional[dict[str, IGrammarBackend]] = None,
        logger: Optional[ILogger] = None,
    ):
        self.parser = parser
        self.printer = printer
        self.template_engine = template_engine
        self.weaver = weaver
        self.query_engine = query_engine
        self.repository = repository
        self.backends = backends or {}
        self.logger = logger

    def _log(self, message: str) -> None:
        if self.logger:
            self.logger.info(message)

    # ---- loading

    def load_templates(self, paths: Iterable[str]) -> ParseResult[TemplateLibrary]:
        """Later files win when two declare the same template"""
        library = TemplateLibrary()
        diagnostics: list[Diagnostic] = []
        for path in paths:
            self._log(_("log_reading", path=path))
            result = self.parser.parse_templates(self.repository.read_text(path), path)
            diagnostics.extend(result.diagnostics)
            if result.value is not None:
                library = library.merged(result.value)
        if has_errors(diagnostics):
            return ParseResult(None, tuple(diagnostics))
        return ParseResult(library, tuple(diagnostics))

    def parse_grammar(self, path: str) -> ParseResult[Grammar]:
        self._log(_("log_reading", path=path))
        return self.parser.parse_grammar(self.repository.read_text(path), path)

    def load_grammar(self, path: str, template_paths: Seq[str] = ()) -> ParseResult[Grammar]:
        """Parsed, import-resolved and flattened grammar"""
        library_result = self.load_templates(template_paths)
        diagnostics = list(library_result.diagnostics)
        parsed = self.parse_grammar(path)
        diagnostics.extend(parsed.diagnostics)
        if parsed.value is None or library_result.value is None:
            return ParseResult(None, tuple(diagnostics))

        grammar = parsed.value
        if grammar.imports:
            resolved = self.template_engine.resolve_imports(grammar, library_result.value)
            diagnostics.extend(resolved.diagnostics)
            if resolved.value is None:
                return ParseResult(None, tuple(diagnostics))
            grammar = resolved.value
        return ParseResult(self.template_engine.flatten(grammar), tuple(diagnostics))

    def load_aspects(self, paths: Iterable[str]) -> ParseResult[tuple[Aspect, ...]]:
        aspects: list[Aspect] = []
        diagnostics: list[Diagnostic] = []
        for path in paths:
            self._log(_("log_reading", path=path))
            result = self.parser.parse_aspect(self.repository.read_text(path), path)
            diagnostics.extend(result.diagnostics)
            if result.value is not None:
                aspects.append(result.value)
        if has_errors(diagnostics):
            return ParseResult(None, tuple(diagnostics))
        return ParseResult(tuple(aspects), tuple(diagnostics))

    def load_queries(self, path: str) -> ParseResult[tuple[Query, ...]]:
        """A bare query, or an aspect file whose rule queries are used in order"""
        text = self.repository.read_text(path)
        single = self.parser.parse_query(text, path)
        if single.value is not None:
            return ParseResult((single.value,), single.diagnostics)
        aspect = self.parser.parse_aspect(text, path)
        if aspect.value is not None:
            return ParseResult(tuple(rule.query for rule in aspect.value.rules), aspect.diagnostics)
        return ParseResult(None, single.diagnostics)

    # ---- processing

    def weave(self, grammar: Grammar, aspects: Iterable[Aspect]) -> ParseResult[Grammar]:
        """The grammar is returned even when constraints report errors"""
        diagnostics: list[Diagnostic] = []
        for aspect in aspects:
            grammar, produced = self.weaver.apply_aspect(aspect, grammar)
            diagnostics.extend(produced)
        return ParseResult(grammar, tuple(diagnostics))

    def prepare(self, grammar_path: str, template_paths: Seq[str] = (), aspect_paths: Seq[str] = ()) -> ParseResult[Grammar]:
        loaded = self.load_grammar(grammar_path, template_paths)
        aspects = self.load_aspects(aspect_paths)
        diagnostics = list(loaded.diagnostics) + list(aspects.diagnostics)
        if loaded.value is None or aspects.value is None:
            return ParseResult(None, tuple(diagnostics))
        woven = self.weave(loaded.value, aspects.value)
        return ParseResult(woven.value, tuple(diagnostics) + woven.diagnostics)

    def run_queries(self, grammar: Grammar, queries: Iterable[Query]) -> list[tuple[Query, Binding]]:
        return [
            (query, binding)
            for query in queries
            for binding in self.query_engine.match_query(query, grammar)
        ]

    def export(self, grammar: Grammar, backend_name: str) -> ExportResult:
        backend = self.backends.get(backend_name)
        if backend is None:
            diagnostic = Diagnostic(Severity.ERROR, _("backend_unknown", name=backend_name))
            return ExportResult(None, (diagnostic,))
        return backend.export(grammar)

    # ---- output

    def format_target(self, grammar: Grammar, target: Target) -> str:
        if isinstance(target, NodeRun):
            return "[" + ", ".join(grammar.node_path(node_id) for node_id in target.nodes) + "]"
        return grammar.node_path(target)

    def format_bindings(self, grammar: Grammar, matches: Iterable[tuple[Query, Binding]]) -> str:
        """`var = path` lines, one block per binding, blocks separated by a blank line"""
        blocks = []
        for query, binding in matches:
            lines = [
                f"{name} = {self.format_target(grammar, binding[name])}"
                for name in query.variables()
                if name in binding
            ]
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n" if blocks else ""

    def format_annotated(self, grammar: Grammar) -> str:
        """Printed grammar, then `@annotations` with one `path { ... }` line per annotated node"""
        text = self.printer.print_grammar(grammar)
        if text:
            text += "\n"
        lines = ["@annotations"]
        for path, node in grammar.iter_paths():
            if len(node.annotations):
                lines.append(f"{path} {self.printer.format_annotations(node.annotations)}")
        return text + "\n".join(lines) + "\n"
