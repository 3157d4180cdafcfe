from typing import Optional

from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.traces.features.analysePerp.contracts.CONTRACT_HELPER_AnalysePerp_V0 import (
    CONTRACT_HELPER_AnalysePerp_V0,
)
from src.app.core.traces.features.analysePerp.interfaces.INTERFACE_HELPER_AnalysePerp import (
    INTERFACE_HELPER_AnalysePerp,
)
from src.app.core.traces.features.analysePerp.schemas.INPUT_AnalysePerp import INPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.schemas.OUTPUT_AnalysePerp import OUTPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.services.SERVICE_AnalysePerp import (
    SERVICE_AnalysePerp,
)
from src.app.infra.workers.services.service_workers import get_service_workers


def create_analyse_perp_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_AnalysePerp]] = None,
) -> SERVICE_AnalysePerp:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_AnalysePerp_V0": CONTRACT_HELPER_AnalysePerp_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_AnalysePerp(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_AnalysePerp] = None


def get_analyse_perp_service() -> SERVICE_AnalysePerp:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_analyse_perp_service()
    return _service_instance


async def FUNCTION_AnalysePerp(
    input_data: INPUT_AnalysePerp,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_AnalysePerp]:
    service = get_analyse_perp_service()
    return await service.run(ServiceInput(data=input_data, command=command))
