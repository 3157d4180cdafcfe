"""
Container for service dependencies.

Encapsulates the cross-cutting dependencies shared by every feature service.
"""

from dataclasses import dataclass, field
from typing import Optional

from src.app.infra.logger.interfaces.logger_service import LoggerService
from src.app.infra.workers.interfaces.worker_service import WorkerService


@dataclass
class ServiceDependency:
    """
    Container for service dependencies.

    This allows adding new cross-cutting dependencies without
    changing service constructor signatures.

    Attributes:
        logger: Logging service handed to usecases (defaults to the shared one)
        workers: Worker pool used by compute helpers (defaults to the shared one)
    """

    logger: Optional[LoggerService] = field(default=None)
    workers: Optional[WorkerService] = field(default=None)
