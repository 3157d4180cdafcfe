from typing import Optional

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.reports.features.runPipeline.contracts.CONTRACT_HELPER_RunPipeline_V0 import (
    CONTRACT_HELPER_RunPipeline_V0,
)
from src.app.core.reports.features.runPipeline.interfaces.INTERFACE_HELPER_RunPipeline import (
    INTERFACE_HELPER_RunPipeline,
)
from src.app.core.reports.features.runPipeline.schemas.INPUT_RunPipeline import INPUT_RunPipeline
from src.app.core.reports.features.runPipeline.schemas.OUTPUT_RunPipeline import (
    OUTPUT_RunPipeline,
)
from src.app.core.reports.features.runPipeline.services.SERVICE_RunPipeline import (
    SERVICE_RunPipeline,
)
from src.app.infra.workers.services.service_workers import get_service_workers


def create_run_pipeline_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_RunPipeline]] = None,
) -> SERVICE_RunPipeline:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_RunPipeline_V0": CONTRACT_HELPER_RunPipeline_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_RunPipeline(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_RunPipeline] = None


def get_run_pipeline_service() -> SERVICE_RunPipeline:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_run_pipeline_service()
    return _service_instance


async def FUNCTION_RunPipeline(
    input_data: INPUT_RunPipeline,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_RunPipeline]:
    service = get_run_pipeline_service()
    return await service.run(ServiceInput(data=input_data, command=command))
