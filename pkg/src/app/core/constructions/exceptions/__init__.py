"""
Exceptions module for constructions.
"""

from src.app.core.constructions.exceptions.ConstructionException import (
    ConstructionException,
    GpgFormatException,
)

__all__ = ["ConstructionException", "GpgFormatException"]
