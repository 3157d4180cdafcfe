"""
Service for constructing classical geometries.
"""

from typing import Dict

from src.app.core.constructions.features.constructGeometry.interfaces.INTERFACE_HELPER_ConstructGeometry import (
    INTERFACE_HELPER_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.INPUT_ConstructGeometry import (
    INPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.OUTPUT_ConstructGeometry import (
    OUTPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.usecases.USECASE_ConstructGeometry import (
    USECASE_ConstructGeometry,
)
from src.app.core.origin.entities.abstract_service import AbstractService
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.origin.schemas.ServiceDependency import ServiceDependency


class SERVICE_ConstructGeometry(
    AbstractService[INPUT_ConstructGeometry, OUTPUT_ConstructGeometry]
):
    SERVICE_NAME = "Constructions.ConstructGeometry"
    HELPER_KEY = "CONTRACT_HELPER_ConstructGeometry_V0"

    def __init__(
        self,
        dependencies: ServiceDependency,
        helpers: Dict[str, INTERFACE_HELPER_ConstructGeometry],
    ):
        super().__init__(dependencies)
        self.helpers = helpers

    def detect_service_name(self) -> str:
        return self.SERVICE_NAME

    def build(self, input_data: INPUT_ConstructGeometry) -> AbstractUsecase:
        usecase_helper = self.helpers.get(self.HELPER_KEY)
        if usecase_helper is None:
            raise RuntimeError(f"Helper not found: {self.HELPER_KEY}")
        return USECASE_ConstructGeometry(usecase_helper, self.logger)
