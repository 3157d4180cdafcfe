"""
Abstract service that handles dependency wiring and usecase execution.
"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.exceptions.AppException import AppException
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.services.service_workers import get_service_workers

I = TypeVar("I")  # Input type
O = TypeVar("O")  # Output type


class AbstractService(ABC, Generic[I, O]):
    """
    Abstract service that handles usecase execution.

    This class provides:
    - Shared dependencies (logger, worker pool) via ServiceDependency
    - Structured input/output via ServiceInput/ServiceOutput
    - Exception handling with proper status mapping

    Subclasses must implement:
    - detect_service_name(): Return a unique service identifier
    - build(): Create the usecase instance with its dependencies
    """

    def __init__(self, dependencies: ServiceDependency):
        """
        Constructor to inject service dependencies.

        Args:
            dependencies: The container holding all service dependencies
        """
        self.logger = dependencies.logger or get_service_logger()
        self.workers = dependencies.workers or get_service_workers()

    @abstractmethod
    def detect_service_name(self) -> str:
        """
        Detect and return the service name.
        Used for logging purposes.

        Returns:
            The unique name/identifier of this service
        """
        pass

    @abstractmethod
    def build(self, input_data: I) -> AbstractUsecase:
        """
        Build the usecase with its dependencies.

        Args:
            input_data: The usecase input, can be used to determine and fetch
                        the right dependencies based on input values.

        Returns:
            The configured usecase instance
        """
        pass

    def judge(self, result: O) -> ServiceOutput[O]:
        """
        Turn a finished usecase result into a ServiceOutput.

        Services whose outputs carry anomalies override this to report
        ServiceStatus.ANOMALY while still returning the data.
        """
        return ServiceOutput.success(result)

    async def run(self, service_input: ServiceInput[I]) -> ServiceOutput[O]:
        """
        Run the service with structured response.

        Args:
            service_input: The service input containing the request data

        Returns:
            ServiceOutput with status, data, and error message
        """
        name = self.detect_service_name()
        self.logger.debug(f"[SERVICE] {name} <- {service_input.command or 'direct call'}")
        try:
            usecase = self.build(service_input.data)
            result = await usecase.execute(service_input.data)
            return self.judge(result)
        except AppException as e:
            self.logger.warning(f"[SERVICE] {name} : {e.status.value} : {e}")
            return e.to_output()
        except Exception as e:
            self.logger.error(f"[SERVICE] {name} : unexpected error : {e}")
            return ServiceOutput.internal_error(str(e))
