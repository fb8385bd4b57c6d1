"""Backends: grammar export to other tools"""
from .yacc import YaccBackend

__all__ = ['YaccBackend']
