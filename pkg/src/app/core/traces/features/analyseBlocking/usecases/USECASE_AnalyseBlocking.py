"""
Use case for the X-blocking analysis of a generalised 2m-gon: smallest
blocking size, classification of every smallest blocking set, and the
line checks.
"""

from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.traces.features.analyseBlocking.interfaces.INTERFACE_HELPER_AnalyseBlocking import (
    INTERFACE_HELPER_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.INPUT_AnalyseBlocking import (
    INPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.OUTPUT_AnalyseBlocking import (
    OUTPUT_AnalyseBlocking,
)
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_AnalyseBlocking(AbstractUsecase):

    def __init__(
        self, usecase_helper: INTERFACE_HELPER_AnalyseBlocking, logger: LoggerService
    ):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_AnalyseBlocking) -> OUTPUT_AnalyseBlocking:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] X-blocking sets of {input.path}")
        self._logger.info(f"{'='*60}")

        geometry, oracle, order = await self._helper.load_polygon(input.path, input.n)
        s, t = order.s, order.t

        min_size = await self._helper.min_size(geometry, oracle, s, input.exhaustive_cap)
        converse = await self._helper.converse(geometry, oracle, s, input.exhaustive_cap)
        bound, line_violations = await self._helper.line_checks(geometry, oracle, s, t)
        g4s_violations = await self._helper.g4s(geometry, oracle, s)

        self._logger.info(f"[USECASE] line-blocking bound: {bound}")
        return OUTPUT_AnalyseBlocking(
            label=geometry.label,
            n=order.n,
            s=s,
            t=t,
            min_size=min_size,
            converse=converse,
            line_blocking_bound=bound,
            line_violations=line_violations,
            g4s_violations=g4s_violations,
        )
