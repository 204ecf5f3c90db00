"""
CLI Module
Command-line interface for threec
"""

from .cli import cli, main

__all__ = ['cli', 'main']
