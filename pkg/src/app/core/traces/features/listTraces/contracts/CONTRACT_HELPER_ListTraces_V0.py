from typing import List, Optional, Tuple

from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.functions.certification import certify_polygon
from src.app.core.traces.entities.DistanceTrace import DistanceTrace
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.listTraces.interfaces.INTERFACE_HELPER_ListTraces import (
    INTERFACE_HELPER_ListTraces,
)
from src.app.core.traces.functions.blocking import is_x_blocking
from src.app.core.traces.functions.distance_traces import enumerate_traces
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_ListTraces_V0(INTERFACE_HELPER_ListTraces):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load_polygon(self, path: str, n: Optional[int]) -> Tuple[Geometry, DistanceOracle]:
        geometry = import_gpg(path)
        oracle, order = certify_polygon(geometry, n, workers=self._workers)
        if order.m is None:
            raise TraceException(f"distance traces need an even gonality, got n = {order.n}")
        return geometry, oracle

    async def traces(self, geometry: Geometry, oracle: DistanceOracle, d: int) -> List[DistanceTrace]:
        traces = enumerate_traces(geometry, oracle, d)
        self._logger.info(f"[{geometry.label}] {len(traces)} distinct traces for d={d}")
        return traces

    async def is_blocking(self, geometry: Geometry, oracle: DistanceOracle, trace: DistanceTrace) -> bool:
        return is_x_blocking(geometry, oracle, trace.points).is_blocking
