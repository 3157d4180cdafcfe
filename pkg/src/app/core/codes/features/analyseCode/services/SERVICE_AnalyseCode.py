"""
Service for analysing the incidence code of a geometry.
"""

from typing import Dict

from src.app.core.codes.features.analyseCode.interfaces.INTERFACE_HELPER_AnalyseCode import (
    INTERFACE_HELPER_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.INPUT_AnalyseCode import (
    INPUT_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.OUTPUT_AnalyseCode import (
    OUTPUT_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.usecases.USECASE_AnalyseCode import (
    USECASE_AnalyseCode,
)
from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput


class SERVICE_AnalyseCode(AbstractService[INPUT_AnalyseCode, OUTPUT_AnalyseCode]):

    SERVICE_NAME = "Codes.AnalyseCode"
    HELPER_KEY = "CONTRACT_HELPER_AnalyseCode_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_AnalyseCode],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_AnalyseCode) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_AnalyseCode(usecase_helper, self.logger)

    def judge(self, result: OUTPUT_AnalyseCode) -> ServiceOutput[OUTPUT_AnalyseCode]:
        anomalies = result.anomalies()
        if anomalies:
            return ServiceOutput.anomaly(result, "; ".join(anomalies))
        return ServiceOutput.success(result)
