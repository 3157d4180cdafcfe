"""
Use case for computing the incidence code of a geometry over GF(p), its
low-weight words and their classification by distance traces.
"""

from collections import Counter

from src.app.core.codes.features.analyseCode.interfaces.INTERFACE_HELPER_AnalyseCode import (
    INTERFACE_HELPER_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.INPUT_AnalyseCode import (
    INPUT_AnalyseCode,
)
from src.app.core.codes.features.analyseCode.schemas.OUTPUT_AnalyseCode import (
    OUTPUT_AnalyseCode,
)
from src.app.core.geometry.exceptions.GeometryException import (
    PolygonCertificationException,
)
from src.app.core.origin.entities.abstract_usecase import AbstractUsecase
from src.app.infra.logger.interfaces.logger_service import LoggerService


class USECASE_AnalyseCode(AbstractUsecase):

    def __init__(self, usecase_helper: INTERFACE_HELPER_AnalyseCode, logger: LoggerService):
        self._helper = usecase_helper
        self._logger = logger

    async def execute(self, input: INPUT_AnalyseCode) -> OUTPUT_AnalyseCode:
        """
        Raises:
            PolygonCertificationException: classification requested on a
                geometry that is not a generalised 2m-gon
            CostGuardExceededException: a word search would pass its budget
        """
        self._logger.info(f"{'='*60}")
        self._logger.info(f"[USECASE] Incidence code of {input.path} over GF({input.p})")
        self._logger.info(f"{'='*60}")

        geometry = await self._helper.load(input.path)
        code = await self._helper.build_code(geometry, input.p)
        output = OUTPUT_AnalyseCode(
            label=geometry.label,
            p=input.p,
            length=code.length,
            rank=code.rank,
            dual_dimension=code.dual_dimension,
        )

        certified = await self._helper.certify(geometry)
        oracle = None
        if certified is not None:
            oracle, order = certified
            output.n, output.s, output.t = order.n, order.s, order.t
            if order.m is not None and order.m >= 2:
                output.field_condition = await self._helper.field_condition(order.s, order.m, input.p)
                output.theorem_applicable = (
                    output.field_condition.holds and order.s <= order.t and order.is_thick
                )
            self._logger.info(
                f"[USECASE] order ({order.s}, {order.t}), theorem applicable: {output.theorem_applicable}"
            )

        if input.w_max is not None:
            output.words = await self._helper.low_weight(code, input.w_max, input.allow_expensive)
        if input.min_weight or (input.classify and input.w_max is None):
            result = await self._helper.min_weight(code, input.allow_expensive)
            output.min_weight = result.weight
            if input.w_max is None:
                output.words = result.words
        output.line_multiples = sum(1 for word in output.words if word.is_line_multiple)

        if input.classify:
            if oracle is None or output.s is None or output.n % 2:
                raise PolygonCertificationException(
                    f"{geometry.label or input.path} is not a generalised 2m-gon; traces are undefined"
                )
            await self._helper.classify(geometry, oracle, output.words, output.s)
            candidates = [word for word in output.words if word.weight == output.s + 1]
            output.classification = dict(
                sorted(Counter(w.trace_match.d for w in candidates if w.trace_match).items())
            )
            output.unclassified = sum(1 for w in candidates if w.trace_match is None)
            self._logger.info(
                f"[USECASE] classification {output.classification}, unclassified {output.unclassified}"
            )

        return output
