"""
Exceptions module for the report pipeline.
"""

from src.app.core.reports.exceptions.ConfigException import ConfigException

__all__ = ["ConfigException"]
