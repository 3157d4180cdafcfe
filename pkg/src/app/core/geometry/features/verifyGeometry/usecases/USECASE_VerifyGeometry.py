"""
Use case for certifying a geometry file as a generalised n-gon.

Steps:
1. Load the .gpg file
2. Compute distances (None when disconnected)
3. Check the axioms, collecting witnesses
4. For a certified polygon: admissibility of the order, the forced
   counts, and for even n the ball-intersection identities
"""

from src.app.core.geometry.features.verifyGeometry.interfaces.INTERFACE_HELPER_VerifyGeometry import (
    INTERFACE_HELPER_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.INPUT_VerifyGeometry import (
    INPUT_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.OUTPUT_VerifyGeometry import (
    OUTPUT_VerifyGeometry,
)
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_VerifyGeometry(AbstractUsecase):

    def __init__(
        self, usecase_helper: INTERFACE_HELPER_VerifyGeometry, logger: LoggerService
    ):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_VerifyGeometry) -> OUTPUT_VerifyGeometry:
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Verifying {input.path} as a generalised {input.n}-gon")
        self._logger.info(f"{'='*60}")

        geometry = await self._helper.load(input.path)
        oracle = await self._helper.distances(geometry)
        axioms = await self._helper.verify(geometry, input.n, oracle)

        output = OUTPUT_VerifyGeometry(
            label=geometry.label,
            n=input.n,
            num_points=geometry.num_points,
            num_lines=geometry.num_lines,
            axioms=axioms,
        )
        if not axioms.passed:
            self._logger.error(f"[USECASE] {len(axioms.violations)} axiom(s) fail")
            return output

        order = axioms.order
        output.admissibility = await self._helper.admissibility(input.n, order.s, order.t)
        counts = await self._helper.expected_counts(input.n, order.s, order.t)
        if counts is not None:
            output.expected_points, output.expected_lines = counts
        if input.n % 2 == 0:
            output.intersection_violations = await self._helper.intersections(geometry, oracle)
            if output.intersection_violations is None:
                output.notes.append("intersection identities skipped: geometry too large")
        else:
            output.notes.append("intersection identities apply to even n only")

        self._logger.info(
            f"[USECASE] certified: n={input.n}, order ({order.s}, {order.t}), "
            f"thick={axioms.is_thick}"
        )
        return output
