"""
Concrete implementation of INTERFACE_HELPER_VerifyGeometry.
"""

from typing import List, Optional, Tuple

from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.geometry.entities.AxiomReport import (
    AxiomReport,
    OrderAdmissibility,
    Violation,
)
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
    GeometryException,
)
from src.app.core.geometry.features.verifyGeometry.interfaces.INTERFACE_HELPER_VerifyGeometry import (
    INTERFACE_HELPER_VerifyGeometry,
)
from src.app.core.geometry.functions.certification import (
    check_intersections,
    verify_polygon,
)
from src.app.core.geometry.functions.distances import distances
from src.app.core.geometry.functions.parameters import expected_counts, validate_order
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_VerifyGeometry_V0(INTERFACE_HELPER_VerifyGeometry):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load(self, path: str) -> Geometry:
        geometry = import_gpg(path)
        self._logger.info(
            f"[{path}] loaded {geometry.num_points} points, {geometry.num_lines} lines"
        )
        return geometry

    async def distances(self, geometry: Geometry) -> Optional[DistanceOracle]:
        try:
            oracle = distances(geometry, self._workers)
        except DisconnectedGeometryException as e:
            self._logger.warning(f"[{geometry.label}] {e}")
            return None
        self._logger.debug(
            f"[{geometry.label}] diameter {oracle.diameter}, girth {oracle.girth}"
        )
        return oracle

    async def verify(
        self, geometry: Geometry, n: int, oracle: Optional[DistanceOracle]
    ) -> AxiomReport:
        report = verify_polygon(geometry, n, oracle=oracle, workers=self._workers)
        for violation in report.violations:
            self._logger.warning(
                f"[{geometry.label}] {violation.kind}: {violation.message} "
                f"(witness {violation.witness})"
            )
        return report

    async def admissibility(self, n: int, s: int, t: int) -> OrderAdmissibility:
        return validate_order(n, s, t)

    async def expected_counts(self, n: int, s: int, t: int) -> Optional[Tuple[int, int]]:
        try:
            return expected_counts(n, s, t)
        except GeometryException as e:
            self._logger.debug(f"no count formula: {e}")
            return None

    async def intersections(
        self, geometry: Geometry, oracle: DistanceOracle
    ) -> Optional[List[Violation]]:
        try:
            return check_intersections(geometry, oracle)
        except CostGuardExceededException as e:
            self._logger.warning(f"[{geometry.label}] intersections skipped: {e}")
            return None
