"""
Exceptions module for traces and blocking sets.
"""

from src.app.core.traces.exceptions.TraceException import (
    TraceException,
    WitnessNotFoundException,
)

__all__ = ["TraceException", "WitnessNotFoundException"]
