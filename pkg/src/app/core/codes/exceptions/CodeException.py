"""
Exception raised for invalid requests against an incidence code.
"""

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class CodeException(AppException):
    """Extension field requested, vector/code mismatch, infeasible search."""

    def __init__(self, message: str):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)
