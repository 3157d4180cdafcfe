from typing import Dict

from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.reports.features.runPipeline.interfaces.INTERFACE_HELPER_RunPipeline import (
    INTERFACE_HELPER_RunPipeline,
)
from src.app.core.reports.features.runPipeline.schemas.INPUT_RunPipeline import INPUT_RunPipeline
from src.app.core.reports.features.runPipeline.schemas.OUTPUT_RunPipeline import (
    OUTPUT_RunPipeline,
)
from src.app.core.reports.features.runPipeline.usecases.USECASE_RunPipeline import (
    USECASE_RunPipeline,
)
from src.app.core.reports.functions.pipeline import report_status


class SERVICE_RunPipeline(AbstractService[INPUT_RunPipeline, OUTPUT_RunPipeline]):
    """
    The report is returned whatever its status; anomalies and aborted runs
    are ANOMALY, a run that only hit cost guards is COST_GUARD_EXCEEDED.
    """

    SERVICE_NAME = "Reports.RunPipeline"
    HELPER_KEY = "CONTRACT_HELPER_RunPipeline_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_RunPipeline],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_RunPipeline) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_RunPipeline(usecase_helper, self.logger)

    def judge(self, result: OUTPUT_RunPipeline) -> ServiceOutput[OUTPUT_RunPipeline]:
        report = result.report
        status = report_status(report)
        if status == ServiceStatus.SUCCESS:
            return ServiceOutput.success(result)
        if report.aborted:
            return ServiceOutput.anomaly(result, report.abort_reason or "pipeline aborted")
        if status == ServiceStatus.ANOMALY:
            return ServiceOutput.anomaly(result, "; ".join(record.check for record in report.anomalies))
        return ServiceOutput.failure(status, "; ".join(report.notices), data=result)
