from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.core.traces.exceptions.TraceException import TraceException
from src.app.core.traces.features.analysePerp.interfaces.INTERFACE_HELPER_AnalysePerp import (
    INTERFACE_HELPER_AnalysePerp,
)
from src.app.core.traces.features.analysePerp.schemas.INPUT_AnalysePerp import INPUT_AnalysePerp
from src.app.core.traces.features.analysePerp.schemas.OUTPUT_AnalysePerp import (
    OUTPUT_AnalysePerp,
    PerpPointResult,
)
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_AnalysePerp(AbstractUsecase):
    """
    Builds the perp geometry of each requested point, tests it against the
    projective-plane axioms and checks that the distance-2 traces at the
    point are X-blocking.
    """

    def __init__(self, usecase_helper: INTERFACE_HELPER_AnalysePerp, logger: LoggerService):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_AnalysePerp) -> OUTPUT_AnalysePerp:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Perp geometries ({input.variant}) of {input.path}")
        self._logger.info(f"{'='*60}")

        geometry, oracle = await self._helper.load_polygon(input.path, input.n)
        if input.point is None:
            points = range(geometry.num_points)
        elif geometry.is_point(input.point):
            points = [input.point]
        else:
            raise TraceException(f"point {input.point} is outside 0..{geometry.num_points - 1}")

        results = []
        for x in points:
            perp = await self._helper.perp(geometry, oracle, x, input.variant)
            results.append(
                PerpPointResult(
                    point=x,
                    perp_points=perp.geometry.num_points,
                    perp_lines=perp.geometry.num_lines,
                    trace_lines=perp.num_trace_lines,
                    projective=await self._helper.is_projective(perp),
                    unblocking_opposites=await self._helper.unblocking_opposites(geometry, oracle, x),
                )
            )

        output = OUTPUT_AnalysePerp(label=geometry.label, variant=input.variant, points=results)
        self._logger.info(f"[USECASE] {output.projective_count} of {len(results)} points are projective")
        return output
