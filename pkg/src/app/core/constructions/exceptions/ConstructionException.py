"""
Exceptions raised by the classical constructions and the gpg file format.
"""

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class ConstructionException(AppException):
    """Unsupported parameters, or a built geometry that failed certification."""

    def __init__(self, message: str, status: ServiceStatus = ServiceStatus.VALIDATION_ERROR):
        super().__init__(status, message)

    @classmethod
    def certification_failed(cls, message: str) -> "ConstructionException":
        return cls(message, status=ServiceStatus.CERTIFICATION_FAILURE)


class GpgFormatException(AppException):
    """Malformed gpg text: bad header, bad record, index out of range."""

    def __init__(self, message: str, line_number: int = 0):
        where = f"line {line_number}: " if line_number else ""
        super().__init__(ServiceStatus.VALIDATION_ERROR, f"{where}{message}")
        self.line_number = line_number
