from .i_source_repository import ISourceRepository

__all__ = ['ISourceRepository']
