"""
Factory function for creating and running SERVICE_AnalyseBlocking.
"""

from typing import Optional

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.traces.features.analyseBlocking.contracts.CONTRACT_HELPER_AnalyseBlocking_V0 import (
    CONTRACT_HELPER_AnalyseBlocking_V0,
)
from src.app.core.traces.features.analyseBlocking.interfaces.INTERFACE_HELPER_AnalyseBlocking import (
    INTERFACE_HELPER_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.INPUT_AnalyseBlocking import (
    INPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.OUTPUT_AnalyseBlocking import (
    OUTPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.services.SERVICE_AnalyseBlocking import (
    SERVICE_AnalyseBlocking,
)
from src.app.infra.workers.services.service_workers import get_service_workers


def create_analyse_blocking_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_AnalyseBlocking]] = None,
) -> SERVICE_AnalyseBlocking:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_AnalyseBlocking_V0": CONTRACT_HELPER_AnalyseBlocking_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_AnalyseBlocking(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_AnalyseBlocking] = None


def get_analyse_blocking_service() -> SERVICE_AnalyseBlocking:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_analyse_blocking_service()
    return _service_instance


async def FUNCTION_AnalyseBlocking(
    input_data: INPUT_AnalyseBlocking,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_AnalyseBlocking]:
    """
    Returns:
        ServiceOutput with status SUCCESS or ANOMALY and the analysis attached;
        COST_GUARD_EXCEEDED when a subset enumeration passes the exhaustive cap.
    """
    service = get_analyse_blocking_service()
    return await service.run(ServiceInput(data=input_data, command=command))
