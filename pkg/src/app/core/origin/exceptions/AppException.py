"""
Base exception for gpcode errors that map to a ServiceStatus, and so to a
process exit code.
"""

from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class AppException(Exception):
    """
    Base exception for application-specific errors.

    Attributes:
        status: The ServiceStatus indicating the type of error
        message: Human-readable error message
    """

    def __init__(self, status: ServiceStatus, message: str):
        super().__init__(message)
        self._status = status

    @property
    def status(self) -> ServiceStatus:
        """Get the ServiceStatus for this exception."""
        return self._status

    @property
    def message(self) -> str:
        return str(self)

    @property
    def exit_code(self) -> int:
        return self._status.exit_code

    def to_output(self) -> ServiceOutput:
        """The failure record a service or the CLI returns for this error."""
        return ServiceOutput.failure(self._status, self.message)


class CostGuardExceededException(AppException):
    """Raised when an exhaustive search would exceed its configured cap."""

    def __init__(self, message: str):
        super().__init__(ServiceStatus.COST_GUARD_EXCEEDED, message)
