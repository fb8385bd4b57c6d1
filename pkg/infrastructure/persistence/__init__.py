"""Persistence layer: file access"""
from .source_file_repository import SourceFileRepository

__all__ = ['SourceFileRepository']
