"""
Service for certifying generalised polygons.
"""

from typing import Dict

from src.app.core.geometry.features.verifyGeometry.interfaces.INTERFACE_HELPER_VerifyGeometry import (
    INTERFACE_HELPER_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.INPUT_VerifyGeometry import (
    INPUT_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.OUTPUT_VerifyGeometry import (
    OUTPUT_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.usecases.USECASE_VerifyGeometry import (
    USECASE_VerifyGeometry,
)
from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus


class SERVICE_VerifyGeometry(AbstractService[INPUT_VerifyGeometry, OUTPUT_VerifyGeometry]):
    """
    A geometry that fails an axiom is a CERTIFICATION_FAILURE; a certified
    polygon whose order or counts contradict the theory is an ANOMALY.
    Both still return the full output.
    """

    SERVICE_NAME = "Geometry.VerifyGeometry"
    HELPER_KEY = "CONTRACT_HELPER_VerifyGeometry_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_VerifyGeometry],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_VerifyGeometry) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_VerifyGeometry(usecase_helper, self.logger)

    def judge(self, result: OUTPUT_VerifyGeometry) -> ServiceOutput[OUTPUT_VerifyGeometry]:
        if not result.axioms.passed:
            kinds = ", ".join(sorted({v.kind for v in result.axioms.violations}))
            return ServiceOutput.failure(
                ServiceStatus.CERTIFICATION_FAILURE,
                f"{result.label or 'geometry'} is not a generalised {result.n}-gon ({kinds})",
                data=result,
            )
        anomalies = result.anomalies()
        if anomalies:
            return ServiceOutput.anomaly(result, "; ".join(anomalies))
        return ServiceOutput.success(result)
