"""
Exceptions module for core origin.
"""

from src.app.core.origin.exceptions.AppException import (
    AppException,
    CostGuardExceededException,
)

__all__ = ["AppException", "CostGuardExceededException"]
