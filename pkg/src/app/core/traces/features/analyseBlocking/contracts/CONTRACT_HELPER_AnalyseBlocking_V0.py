"""
Concrete implementation of INTERFACE_HELPER_AnalyseBlocking.

Subset enumerations are bounded by the exhaustive cap (GPCODE_EXHAUSTIVE_CAP
unless the caller passes one) and raise CostGuardExceededException beyond it.
"""

from typing import List, Optional, Tuple

from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.geometry.entities.AxiomReport import Violation
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.geometry.functions.certification import certify_polygon
from src.app.core.traces.entities.BlockingVerdict import ConverseResult, MinBlockingResult
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.analyseBlocking.interfaces.INTERFACE_HELPER_AnalyseBlocking import (
    INTERFACE_HELPER_AnalyseBlocking,
)
from src.app.core.traces.functions.blocking import (
    check_blocking_converse,
    check_g4s,
    line_blocking_bound,
    lines_blocking_survey,
    min_x_blocking_size,
)
from src.app.core.traces.functions.distance_traces import build_trace_catalog
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_AnalyseBlocking_V0(INTERFACE_HELPER_AnalyseBlocking):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load_polygon(
        self, path: str, n: Optional[int]
    ) -> Tuple[Geometry, DistanceOracle, OrderParams]:
        geometry = import_gpg(path)
        oracle, order = certify_polygon(geometry, n, workers=self._workers)
        if order.m is None:
            raise TraceException(f"X-blocking sets need an even gonality, got n = {order.n}")
        self._logger.info(f"[{geometry.label}] generalised {order.n}-gon of order ({order.s}, {order.t})")
        return geometry, oracle, order

    async def min_size(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, cap: Optional[int]
    ) -> MinBlockingResult:
        result = min_x_blocking_size(geometry, oracle, s, cap=cap, workers=self._workers)
        self._logger.info(
            f"[{geometry.label}] smallest X-blocking set: {result.size} points "
            f"({result.certificate}, {result.candidates_checked} subsets ruled out)"
        )
        return result

    async def converse(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, cap: Optional[int]
    ) -> ConverseResult:
        catalog = build_trace_catalog(geometry, oracle)
        result = check_blocking_converse(geometry, oracle, s, catalog, cap=cap, workers=self._workers)
        self._logger.info(
            f"[{geometry.label}] {result.blocking} of {result.candidates} sets of size {result.size} block; "
            f"trace distances {result.d_histogram}"
        )
        return result

    async def line_checks(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, t: int
    ) -> Tuple[Optional[int], List[Violation]]:
        if s * t == 1:
            return None, []
        return line_blocking_bound(geometry, s, t), lines_blocking_survey(geometry, oracle, s, t)

    async def g4s(self, geometry: Geometry, oracle: DistanceOracle, s: int) -> List[Violation]:
        return check_g4s(geometry, oracle, s)
