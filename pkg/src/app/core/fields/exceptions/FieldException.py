"""
Exception raised when a finite field cannot be built or used as requested.
"""

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class FieldException(AppException):
    """Non-prime characteristic, unsupported degree, or a field mismatch."""

    def __init__(self, message: str):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)
