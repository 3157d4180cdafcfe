from typing import Optional

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.traces.features.listTraces.contracts.CONTRACT_HELPER_ListTraces_V0 import (
    CONTRACT_HELPER_ListTraces_V0,
)
from src.app.core.traces.features.listTraces.interfaces.INTERFACE_HELPER_ListTraces import (
    INTERFACE_HELPER_ListTraces,
)
from src.app.core.traces.features.listTraces.schemas.INPUT_ListTraces import INPUT_ListTraces
from src.app.core.traces.features.listTraces.schemas.OUTPUT_ListTraces import OUTPUT_ListTraces
from src.app.core.traces.features.listTraces.services.SERVICE_ListTraces import (
    SERVICE_ListTraces,
)
from src.app.infra.workers.services.service_workers import get_service_workers


def create_list_traces_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_ListTraces]] = None,
) -> SERVICE_ListTraces:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_ListTraces_V0": CONTRACT_HELPER_ListTraces_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_ListTraces(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_ListTraces] = None


def get_list_traces_service() -> SERVICE_ListTraces:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_list_traces_service()
    return _service_instance


async def FUNCTION_ListTraces(
    input_data: INPUT_ListTraces,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_ListTraces]:
    service = get_list_traces_service()
    return await service.run(ServiceInput(data=input_data, command=command))
