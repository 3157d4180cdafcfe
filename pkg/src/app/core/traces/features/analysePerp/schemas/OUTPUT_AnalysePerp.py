from typing import List

from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.PerpGeometry import PerpVariant


class PerpPointResult(BaseClass):
    point: int
    perp_points: int
    perp_lines: int
    trace_lines: int
    projective: bool
    unblocking_opposites: List[int] = []

    @property
    def traces_blocking(self) -> bool:
        return not self.unblocking_opposites


class OUTPUT_AnalysePerp(BaseClass):
    label: str
    variant: PerpVariant
    points: List[PerpPointResult]

    @property
    def projective_count(self) -> int:
        return sum(1 for result in self.points if result.projective)

    def anomalies(self) -> List[str]:
        """A projective point whose distance-2 traces are not all X-blocking."""
        return [
            f"p{result.point} is projective but T(2, p{result.point}, p{y}) is not X-blocking"
            for result in self.points
            if result.projective
            for y in result.unblocking_opposites[:1]
        ]
