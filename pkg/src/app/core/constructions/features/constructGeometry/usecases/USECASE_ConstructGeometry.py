"""
Use case for building a classical geometry and optionally saving it.
"""

from src.app.core.constructions.features.constructGeometry.interfaces.INTERFACE_HELPER_ConstructGeometry import (
    INTERFACE_HELPER_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.INPUT_ConstructGeometry import (
    INPUT_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.OUTPUT_ConstructGeometry import (
    OUTPUT_ConstructGeometry,
)
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_ConstructGeometry(AbstractUsecase):

    def __init__(
        self, usecase_helper: INTERFACE_HELPER_ConstructGeometry, logger: LoggerService
    ):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_ConstructGeometry) -> OUTPUT_ConstructGeometry:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Constructing {input.family} with q={input.q}")
        self._logger.info(f"{'='*60}")

        # Step 1: Build (raises ConstructionException on unsupported q)
        geometry = await self._helper.build(input.family, input.q, input.dual)
        n = await self._helper.gonality(input.family, input.q)

        # Step 2: Save
        if input.out:
            await self._helper.export(geometry, input.out)

        self._logger.info(f"[USECASE] {geometry.label} ready")
        return OUTPUT_ConstructGeometry(
            family=input.family,
            q=input.q,
            dual=input.dual,
            label=geometry.label,
            n=n,
            num_points=geometry.num_points,
            num_lines=geometry.num_lines,
            out=input.out,
        )
