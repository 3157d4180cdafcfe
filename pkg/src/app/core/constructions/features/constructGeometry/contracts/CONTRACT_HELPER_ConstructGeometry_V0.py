"""
Concrete implementation of INTERFACE_HELPER_ConstructGeometry backed by the
classical constructions and the .gpg writer.
"""

from typing import Optional

from src.app.core.constructions.features.constructGeometry.interfaces.INTERFACE_HELPER_ConstructGeometry import (
    INTERFACE_HELPER_ConstructGeometry,
)
from src.app.core.constructions.functions.families import build_family, family_gonality
from src.app.core.constructions.functions.gpg_format import export_gpg
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_ConstructGeometry_V0(INTERFACE_HELPER_ConstructGeometry):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def build(self, family: str, q: int, dual: bool) -> Geometry:
        self._logger.info(f"[family={family}] building with q={q}{' (dual)' if dual else ''}...")
        geometry = build_family(family, q, dual=dual, workers=self._workers)
        self._logger.info(
            f"[family={family}] built {geometry.label}: "
            f"{geometry.num_points} points, {geometry.num_lines} lines"
        )
        return geometry

    async def gonality(self, family: str, q: int) -> int:
        return family_gonality(family, q)

    async def export(self, geometry: Geometry, destination: str) -> None:
        export_gpg(geometry, destination)
        self._logger.info(f"[{geometry.label}] written to {destination}")
