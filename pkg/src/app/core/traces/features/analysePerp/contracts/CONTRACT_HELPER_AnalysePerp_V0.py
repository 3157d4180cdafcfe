from typing import List, Optional, Tuple

from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.functions.certification import certify_polygon
from src.app.core.traces.entities.PerpGeometry import PerpGeometry, PerpVariant
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.analysePerp.interfaces.INTERFACE_HELPER_AnalysePerp import (
    INTERFACE_HELPER_AnalysePerp,
)
from src.app.core.traces.functions.perp import (
    is_projective_plane,
    perp_geometry,
    unblocking_opposites,
)
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_AnalysePerp_V0(INTERFACE_HELPER_AnalysePerp):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load_polygon(self, path: str, n: Optional[int]) -> Tuple[Geometry, DistanceOracle]:
        geometry = import_gpg(path)
        oracle, order = certify_polygon(geometry, n, workers=self._workers)
        if order.m is None:
            raise TraceException(f"perp geometries need an even gonality, got n = {order.n}")
        return geometry, oracle

    async def perp(
        self, geometry: Geometry, oracle: DistanceOracle, x: int, variant: PerpVariant
    ) -> PerpGeometry:
        perp = perp_geometry(geometry, oracle, x, variant)
        self._logger.debug(
            f"[{geometry.label}] perp of p{x}: {perp.geometry.num_points} points, "
            f"{perp.geometry.num_lines} lines ({perp.num_trace_lines} traces)"
        )
        return perp

    async def is_projective(self, perp: PerpGeometry) -> bool:
        return is_projective_plane(perp.geometry)

    async def unblocking_opposites(self, geometry: Geometry, oracle: DistanceOracle, x: int) -> List[int]:
        return unblocking_opposites(geometry, oracle, x)
