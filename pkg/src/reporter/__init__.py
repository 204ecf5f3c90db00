"""
Reporting Module
Generates verification reports and Niemeier sampling plots
"""

from .reporter import SUMMARY_COLUMNS, ReportGenerator

__all__ = ['ReportGenerator', 'SUMMARY_COLUMNS']
