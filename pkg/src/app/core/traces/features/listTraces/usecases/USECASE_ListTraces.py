from collections import Counter

from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.traces.features.listTraces.interfaces.INTERFACE_HELPER_ListTraces import (
    INTERFACE_HELPER_ListTraces,
)
from src.app.core.traces.features.listTraces.schemas.INPUT_ListTraces import INPUT_ListTraces
from src.app.core.traces.features.listTraces.schemas.OUTPUT_ListTraces import OUTPUT_ListTraces
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_ListTraces(AbstractUsecase):
    """Enumerates the distance d-traces of a generalised 2m-gon."""

    def __init__(self, usecase_helper: INTERFACE_HELPER_ListTraces, logger: LoggerService):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_ListTraces) -> OUTPUT_ListTraces:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Distance {input.d}-traces of {input.path}")
        self._logger.info(f"{'='*60}")

        geometry, oracle = await self._helper.load_polygon(input.path, input.n)
        traces = await self._helper.traces(geometry, oracle, input.d)
        blocking = 0
        for trace in traces:
            if await self._helper.is_blocking(geometry, oracle, trace):
                blocking += 1

        sizes = Counter(trace.size for trace in traces)
        self._logger.info(f"[USECASE] sizes {dict(sizes)}, {blocking} X-blocking")
        return OUTPUT_ListTraces(
            label=geometry.label,
            d=input.d,
            m=oracle.m,
            traces=traces,
            size_histogram=dict(sorted(sizes.items())),
            blocking=blocking,
        )
