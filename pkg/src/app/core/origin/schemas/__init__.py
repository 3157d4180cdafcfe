"""
Service envelopes shared by every command: the input wrapper, the output
record with its status, and the injected dependencies.
"""

from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput

__all__ = ["ServiceStatus", "ServiceInput", "ServiceOutput"]
