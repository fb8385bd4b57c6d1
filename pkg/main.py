import sys

from infrastructure.parsing import LarkGrammarParser, GrammarPrinter
from infrastructure.persistence import SourceFileRepository
from infrastructure.backends import YaccBackend
from infrastructure.logging.console_logger import ConsoleLogger
from infrastructure.localization import i18n
from application import QueryEngine, AspectWeaver, TemplateEngine, GrammarPipelineService
from presentation.cli import CommandLineApp
from config import AppConfig, default_config


def create_services(config: AppConfig = default_config):
    """Creates and initializes all application services"""
    if config.locales_dir:
        i18n.use_directory(config.locales_dir)
    i18n.load_language(config.language)

    logger = ConsoleLogger(verbose=config.verbose)
    repository = SourceFileRepository()
    printer = GrammarPrinter()
    parser = LarkGrammarParser(allow_undefined_symbols=config.allow_undefined_symbols)

    query_engine = QueryEngine(logger=logger)
    weaver = AspectWeaver(query_engine, logger=logger)
    template_engine = TemplateEngine(
        logger=logger,
        namespace_prefix=config.anonymous_namespace_prefix,
        allow_undefined_symbols=config.allow_undefined_symbols
    )
    yacc_backend = YaccBackend(
        lexical_attribute=config.lexical_attribute,
        start_attribute=config.start_attribute,
        action_attribute=config.action_attribute,
        epsilon_comment=config.epsilon_comment,
        logger=logger
    )

    pipeline_service = GrammarPipelineService(
        parser,
        printer,
        template_engine,
        weaver,
        query_engine,
        repository,
        backends={yacc_backend.name: yacc_backend},
        logger=logger
    )

    return {
        'logger': logger,
        'repository': repository,
        'printer': printer,
        'pipeline_service': pipeline_service,
    }


def main():
    """Application entry point"""
    app = CommandLineApp(create_services, default_config)
    sys.exit(app.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
