"""
Concrete implementation of INTERFACE_HELPER_AnalyseCode.
"""

from typing import List, Optional, Tuple

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord, MinWeightResult
from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.codes.features.analyseCode.interfaces.INTERFACE_HELPER_AnalyseCode import (
    INTERFACE_HELPER_AnalyseCode,
)
from src.app.core.codes.functions.code_build import code_build
from src.app.core.codes.functions.low_weight import low_weight_codewords, min_weight
from src.app.core.constructions.functions.gpg_format import import_gpg
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.fields.functions.field_operations import field_condition, field_make
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
    PolygonCertificationException,
)
from src.app.core.geometry.functions.certification import certify_polygon
from src.app.core.traces.functions.distance_traces import build_trace_catalog
from src.app.infra.logger.services.service_logger import get_service_logger
from src.app.infra.workers.interfaces.worker_service import WorkerService


class CONTRACT_HELPER_AnalyseCode_V0(INTERFACE_HELPER_AnalyseCode):

    def __init__(self, workers: Optional[WorkerService] = None):
        self._workers = workers
        self._logger = get_service_logger()

    async def load(self, path: str) -> Geometry:
        return import_gpg(path)

    async def certify(self, geometry: Geometry) -> Optional[Tuple[DistanceOracle, OrderParams]]:
        try:
            return certify_polygon(geometry, workers=self._workers)
        except (DisconnectedGeometryException, PolygonCertificationException) as e:
            self._logger.warning(f"[{geometry.label}] not a generalised polygon: {e}")
            return None

    async def build_code(self, geometry: Geometry, p: int) -> LinearCode:
        code = code_build(geometry, field_make(p))
        self._logger.info(
            f"[{geometry.label}] GF({p}) code: length {code.length}, rank {code.rank}"
        )
        return code

    async def field_condition(self, s: int, m: int, p: int) -> FieldCondition:
        return field_condition(s, m, field_make(p))

    async def min_weight(self, code: LinearCode, allow_expensive: bool) -> MinWeightResult:
        result = min_weight(code, allow_expensive=allow_expensive, workers=self._workers)
        self._logger.info(f"minimum weight {result.weight}, {len(result.words)} words up to scalars")
        return result

    async def low_weight(
        self, code: LinearCode, w_max: int, allow_expensive: bool
    ) -> List[ClassifiedWord]:
        words = low_weight_codewords(
            code, w_max, allow_expensive=allow_expensive, workers=self._workers
        )
        self._logger.info(f"{len(words)} words of weight <= {w_max}")
        return words

    async def classify(
        self, geometry: Geometry, oracle: DistanceOracle, words: List[ClassifiedWord], s: int
    ) -> List[ClassifiedWord]:
        catalog = build_trace_catalog(geometry, oracle)
        self._logger.debug(f"[{geometry.label}] {len(catalog)} distinct traces")
        for word in words:
            if word.weight == s + 1:
                trace = catalog.lookup(word.support)
                word.trace_match = trace.ref if trace is not None else None
        return words
