"""
ServiceStatus enum for categorizing outcomes.

Each status maps onto one process exit code of the gpcode CLI.
"""

from enum import Enum


class ServiceStatus(Enum):
    """Enum representing the status of service execution."""

    SUCCESS = "SUCCESS"
    ANOMALY = "ANOMALY"
    VALIDATION_ERROR = "VALIDATION_ERROR"
    NOT_FOUND = "NOT_FOUND"
    COST_GUARD_EXCEEDED = "COST_GUARD_EXCEEDED"
    CERTIFICATION_FAILURE = "CERTIFICATION_FAILURE"
    INTERNAL_ERROR = "INTERNAL_ERROR"

    @property
    def exit_code(self) -> int:
        """Process exit code reported by the CLI for this status."""
        return _EXIT_CODES[self]


_EXIT_CODES = {
    ServiceStatus.SUCCESS: 0,
    ServiceStatus.ANOMALY: 1,
    ServiceStatus.CERTIFICATION_FAILURE: 1,
    ServiceStatus.VALIDATION_ERROR: 2,
    ServiceStatus.NOT_FOUND: 2,
    ServiceStatus.INTERNAL_ERROR: 2,
    ServiceStatus.COST_GUARD_EXCEEDED: 3,
}
