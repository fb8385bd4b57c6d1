"""Command-line surface"""
import argparse
from typing import Callable, Optional, Sequence as Seq

from domain import Diagnostic, Severity, has_errors
from infrastructure.localization import _
from config import AppConfig, default_config

EXIT_OK = 0
EXIT_DIAGNOSTICS = 1
EXIT_USAGE = 2

# (output text or None, diagnostics)
CommandResult = tuple[Optional[str], list[Diagnostic]]


class CommandLineApp:
    """
    `gramweave <command> <grammar> [options]`.
    Exit status: 0 success, 1 when an error diagnostic was reported,
    2 on bad usage or unreadable/unwritable files.
    """

    COMMANDS = ("check", "query", "weave", "instantiate", "export-yacc", "format")

    def __init__(self, service_factory: Callable[[AppConfig], dict], config: AppConfig = default_config):
        self.service_factory = service_factory
        self.config = config

    def _build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("grammar", help=_("cli_help_grammar"))
        common.add_argument("--templates", action="append", default=[], metavar="PATH", help=_("cli_help_templates"))
        common.add_argument("--aspect", action="append", default=[], metavar="PATH", help=_("cli_help_aspect"))
        common.add_argument("--allow-undefined", action="store_true", default=None, help=_("cli_help_allow_undefined"))
        common.add_argument("--out", metavar="PATH", help=_("cli_help_out"))
        common.add_argument("--lang", metavar="CODE", help=_("cli_help_lang"))
        common.add_argument("--verbose", action="store_true", default=None, help=_("cli_help_verbose"))

        parser = argparse.ArgumentParser(prog="gramweave", description=_("cli_description"))
        commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        for name in self.COMMANDS:
            sub = commands.add_parser(name, parents=[common], help=_(f"cli_help_{name.replace('-', '_')}"))
            if name == "query":
                sub.add_argument("--query-file", required=True, metavar="PATH", help=_("cli_help_query_file"))
        return parser

    def run(self, argv: Seq[str]) -> int:
        try:
            args = self._build_parser().parse_args(list(argv))
        except SystemExit as exit_request:
            # argparse has already printed usage or help
            return EXIT_OK if exit_request.code in (0, None) else EXIT_USAGE

        config = self.config.with_overrides(
            language=args.lang,
            verbose=args.verbose,
            allow_undefined_symbols=args.allow_undefined,
        )
        services = self.service_factory(config)
        self.logger = services['logger']
        self.repository = services['repository']
        self.printer = services['printer']
        self.pipeline = services['pipeline_service']

        handler = getattr(self, "_cmd_" + args.command.replace("-", "_"))
        try:
            text, diagnostics = handler(args)
            self._report(diagnostics)
            if text is not None:
                self.repository.write_text(args.out, text)
        except OSError as error:
            self.logger.error(_("cli_io_error", path=error.filename or "", error=error.strerror or str(error)))
            return EXIT_USAGE
        return EXIT_DIAGNOSTICS if has_errors(diagnostics) else EXIT_OK

    def _report(self, diagnostics: Seq[Diagnostic]) -> None:
        for diagnostic in diagnostics:
            if diagnostic.severity is Severity.ERROR:
                self.logger.error(diagnostic.format())
            else:
                self.logger.warning(diagnostic.format())

    # ---- commands

    def _prepare(self, args):
        return self.pipeline.prepare(args.grammar, args.templates, args.aspect)

    def _cmd_check(self, args) -> CommandResult:
        result = self._prepare(args)
        return None, list(result.diagnostics)

    def _cmd_query(self, args) -> CommandResult:
        loaded = self._prepare(args)
        queries = self.pipeline.load_queries(args.query_file)
        diagnostics = list(loaded.diagnostics) + list(queries.diagnostics)
        if loaded.value is None or queries.value is None:
            return None, diagnostics
        matches = self.pipeline.run_queries(loaded.value, queries.value)
        self.logger.info(_("cli_query_summary", count=len(matches)))
        return self.pipeline.format_bindings(loaded.value, matches), diagnostics

    def _cmd_weave(self, args) -> CommandResult:
        result = self._prepare(args)
        if result.value is None:
            return None, list(result.diagnostics)
        return self.pipeline.format_annotated(result.value), list(result.diagnostics)

    def _cmd_instantiate(self, args) -> CommandResult:
        result = self.pipeline.load_grammar(args.grammar, args.templates)
        if result.value is None:
            return None, list(result.diagnostics)
        return self.printer.print_grammar(result.value), list(result.diagnostics)

    def _cmd_export_yacc(self, args) -> CommandResult:
        result = self._prepare(args)
        diagnostics = list(result.diagnostics)
        if result.value is None or has_errors(diagnostics):
            return None, diagnostics
        exported = self.pipeline.export(result.value, "yacc")
        diagnostics.extend(exported.diagnostics)
        if exported.text is not None and args.out:
            self.logger.info(_("cli_written", path=args.out))
        return exported.text, diagnostics

    def _cmd_format(self, args) -> CommandResult:
        result = self.pipeline.parse_grammar(args.grammar)
        if result.value is None:
            return None, list(result.diagnostics)
        return self.printer.print_grammar(result.value), list(result.diagnostics)
