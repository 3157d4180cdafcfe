"""
Factory function for creating and running SERVICE_VerifyGeometry.
"""

from typing import Optional

from src.app.core.geometry.features.verifyGeometry.contracts.CONTRACT_HELPER_VerifyGeometry_V0 import (
    CONTRACT_HELPER_VerifyGeometry_V0,
)
from src.app.core.geometry.features.verifyGeometry.interfaces.INTERFACE_HELPER_VerifyGeometry import (
    INTERFACE_HELPER_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.INPUT_VerifyGeometry import (
    INPUT_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.OUTPUT_VerifyGeometry import (
    OUTPUT_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.services.SERVICE_VerifyGeometry import (
    SERVICE_VerifyGeometry,
)
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency
from src.app.core.origin.schemas.ServiceInput import ServiceInput
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.infra.workers.services.service_workers import get_service_workers


def create_verify_geometry_service(
    helpers: Optional[dict[str, INTERFACE_HELPER_VerifyGeometry]] = None,
) -> SERVICE_VerifyGeometry:
    if helpers is None:
        helpers = {
            "CONTRACT_HELPER_VerifyGeometry_V0": CONTRACT_HELPER_VerifyGeometry_V0(
                workers=get_service_workers()
            ),
        }
    return SERVICE_VerifyGeometry(dependencies=ServiceDependency(), helpers=helpers)


_service_instance: Optional[SERVICE_VerifyGeometry] = None


def get_verify_geometry_service() -> SERVICE_VerifyGeometry:
    global _service_instance
    if _service_instance is None:
        _service_instance = create_verify_geometry_service()
    return _service_instance


async def FUNCTION_VerifyGeometry(
    input_data: INPUT_VerifyGeometry,
    command: Optional[str] = None,
) -> ServiceOutput[OUTPUT_VerifyGeometry]:
    """
    Certify the geometry in `input_data.path` as a generalised n-gon.

    Returns:
        ServiceOutput whose status is SUCCESS, ANOMALY or CERTIFICATION_FAILURE
        with the OUTPUT_VerifyGeometry attached, or an error status without data
        when the file cannot be read.
    """
    service = get_verify_geometry_service()
    return await service.run(ServiceInput(data=input_data, command=command))
