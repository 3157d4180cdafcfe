from typing import Dict

from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.traces.features.analysePerp.interfaces.INTERFACE_HELPER_AnalysePerp import (
    INTERFACE_HELPER_AnalysePerp,
)
from src.app.core.traces.features.analysePerp.schemas.INPUT_AnalysePerp import INPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.schemas.OUTPUT_AnalysePerp import OUTPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.usecases.USECASE_AnalysePerp import (
    USECASE_AnalysePerp,
)


class SERVICE_AnalysePerp(AbstractService[INPUT_AnalysePerp, OUTPUT_AnalysePerp]):

    SERVICE_NAME = "Traces.AnalysePerp"
    HELPER_KEY = "CONTRACT_HELPER_AnalysePerp_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_AnalysePerp],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_AnalysePerp) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_AnalysePerp(usecase_helper, self.logger)

    def judge(self, result: OUTPUT_AnalysePerp) -> ServiceOutput[OUTPUT_AnalysePerp]:
        anomalies = result.anomalies()
        if anomalies:
            return ServiceOutput.anomaly(result, "; ".join(anomalies))
        return ServiceOutput.success(result)
