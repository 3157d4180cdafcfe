from typing import Dict

from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.traces.features.listTraces.interfaces.INTERFACE_HELPER_ListTraces import (
    INTERFACE_HELPER_ListTraces,
)
from src.app.core.traces.features.listTraces.schemas.INPUT_ListTraces import INPUT_ListTraces
from src.app.core.traces.features.listTraces.schemas.OUTPUT_ListTraces import OUTPUT_ListTraces
from src.app.core.traces.features.listTraces.usecases.USECASE_ListTraces import (
    USECASE_ListTraces,
)


class SERVICE_ListTraces(AbstractService[INPUT_ListTraces, OUTPUT_ListTraces]):

    SERVICE_NAME = "Traces.ListTraces"
    HELPER_KEY = "CONTRACT_HELPER_ListTraces_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_ListTraces],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_ListTraces) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_ListTraces(usecase_helper, self.logger)
