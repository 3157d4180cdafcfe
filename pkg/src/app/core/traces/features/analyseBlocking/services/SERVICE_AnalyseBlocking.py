from typing import Dict

from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.traces.features.analyseBlocking.interfaces.INTERFACE_HELPER_AnalyseBlocking import (
    INTERFACE_HELPER_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.INPUT_AnalyseBlocking import (
    INPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.OUTPUT_AnalyseBlocking import (
    OUTPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.usecases.USECASE_AnalyseBlocking import (
    USECASE_AnalyseBlocking,
)


class SERVICE_AnalyseBlocking(AbstractService[INPUT_AnalyseBlocking, OUTPUT_AnalyseBlocking]):

    SERVICE_NAME = "Traces.AnalyseBlocking"
    HELPER_KEY = "CONTRACT_HELPER_AnalyseBlocking_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_AnalyseBlocking],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_AnalyseBlocking) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_AnalyseBlocking(usecase_helper, self.logger)

    def judge(self, result: OUTPUT_AnalyseBlocking) -> ServiceOutput[OUTPUT_AnalyseBlocking]:
        anomalies = result.anomalies()
        if anomalies:
            return ServiceOutput.anomaly(result, "; ".join(anomalies))
        return ServiceOutput.success(result)
