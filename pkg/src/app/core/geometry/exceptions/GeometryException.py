"""
Exceptions raised while building or querying an incidence structure.
"""

from typing import List, Optional

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class GeometryException(AppException):
    """Malformed incidence data: index out of range, repeated point, empty line."""

    def __init__(self, message: str):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)


class DisconnectedGeometryException(AppException):
    """The incidence graph is not connected, so distances are undefined."""

    def __init__(self, message: str, witness: Optional[List[int]] = None):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)
        self.witness = witness or []


class UniquenessViolationException(AppException):
    """A statement that holds in every generalised polygon failed on this geometry."""

    def __init__(self, message: str, witness: Optional[List[int]] = None):
        super().__init__(ServiceStatus.CERTIFICATION_FAILURE, message)
        self.witness = witness or []


class PolygonCertificationException(AppException):
    """The geometry is not a generalised polygon with an order."""

    def __init__(self, message: str, violations: Optional[List] = None):
        super().__init__(ServiceStatus.CERTIFICATION_FAILURE, message)
        self.violations = violations or []
