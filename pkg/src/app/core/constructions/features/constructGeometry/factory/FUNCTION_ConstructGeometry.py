"""
Factory function for creating and running SERVICE_ConstructGeometry.
"""

from typing import Optional

from src.app.core.constructions.features.constructGeometry.contracts.CONTRACT_HELPER_ConstructGeometry_V0 import (
    CONTRACT_HELPER_ConstructGeometry_V0,
)
from src.app.core.constructions.features.constructGeometry.interfaces.INTERFACE_HELPER_ConstructGeometry import (
    INTERFACE_HELPER_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.INPUT_ConstructGeometry import (
    INPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.OUTPUT_ConstructGeometry import (
    OUTPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.services.SERVICE_ConstructGeometry import (
    SERVICE_ConstructGeometry,
)
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.infra.workers.services.service_workers import get_service_workers


def create_construct_geometry_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_ConstructGeometry]] = None,
) -> SERVICE_ConstructGeometry:
    """
    Create a SERVICE_ConstructGeometry with its dependencies wired.

    Args:
        helpers: Optional custom helpers map. If None, uses CONTRACT_HELPER_ConstructGeometry_V0
    """
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_ConstructGeometry_V0": CONTRACT_HELPER_ConstructGeometry_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_ConstructGeometry(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_ConstructGeometry] = None


def get_construct_geometry_service() -> SERVICE_ConstructGeometry:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_construct_geometry_service()
    return _service_instance


async def FUNCTION_ConstructGeometry(
    input_data: INPUT_ConstructGeometry,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_ConstructGeometry]:
    """
    Build a classical geometry and write it to `input_data.out` when given.

    Example:
        result = await FUNCTION_ConstructGeometry(INPUT_ConstructGeometry(family="wq", q=2))
        if result.status == ServiceStatus.SUCCESS:
            print(result.data.label)
    """
    service = get_construct_geometry_service()
    return await service.run(ServiceInput(data=input_data, command=command))
