"""
threec: exact lattice computations for the 3C moonshine path
"""

__version__ = "1.0.0"
