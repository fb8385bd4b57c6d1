"""Application layer: grammar processing use cases"""
from .query_engine import QueryEngine
from .aspect_weaver import AspectWeaver
from .template_engine import TemplateEngine, map_symbol_refs
from .grammar_pipeline_service import GrammarPipelineService

__all__ = [
    'QueryEngine',
    'AspectWeaver',
    'TemplateEngine',
    'map_symbol_refs',
    'GrammarPipelineService'
]
