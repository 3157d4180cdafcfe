"""
Exceptions raised by the trace, blocking-set and perp-geometry operations.
"""

from typing import List, Optional

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class TraceException(AppException):
    """Elements that are not opposite, a parity mismatch, an empty set."""

    def __init__(self, message: str):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)


class WitnessNotFoundException(AppException):
    """A witness that must exist in every generalised polygon was not found."""

    def __init__(self, message: str, context: Optional[List[int]] = None):
        super().__init__(ServiceStatus.CERTIFICATION_FAILURE, message)
        self.context = context or []
