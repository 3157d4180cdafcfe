"""
Factory function for creating and running SERVICE_AnalyseCode.
"""

from typing import Optional

from src.app.core.codes.features.analyseCode.contracts.CONTRACT_HELPER_AnalyseCode_V0 import (
    CONTRACT_HELPER_AnalyseCode_V0,
)
from src.app.core.codes.features.analyseCode.interfaces.INTERFACE_HELPER_AnalyseCode import (
    INTERFACE_HELPER_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.INPUT_AnalyseCode import (
    INPUT_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.OUTPUT_AnalyseCode import (
    OUTPUT_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.services.SERVICE_AnalyseCode import (
    SERVICE_AnalyseCode,
)
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.infra.workers.services.service_workers import get_service_workers


def create_analyse_code_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_AnalyseCode]] = None,
) -> SERVICE_AnalyseCode:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_AnalyseCode_V0": CONTRACT_HELPER_AnalyseCode_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_AnalyseCode(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_AnalyseCode] = None


def get_analyse_code_service() -> SERVICE_AnalyseCode:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_analyse_code_service()
    return _service_instance


async def FUNCTION_AnalyseCode(
    input_data: INPUT_AnalyseCode,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_AnalyseCode]:
    service = get_analyse_code_service()
    return await service.run(ServiceInput(data=input_data, command=command))
