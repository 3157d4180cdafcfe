"""
Exception raised for an unreadable or invalid run configuration.
"""

from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class ConfigException(AppException):
    def __init__(self, message: str):
        super().__init__(ServiceStatus.VALIDATION_ERROR, message)
