from typing import List, Optional

from src.app.core.geometry.entities.AxiomReport import Violation
from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.BlockingVerdict import ConverseResult, MinBlockingResult


class OUTPUT_AnalyseBlocking(BaseClass):
    label: str
    n: int
    s: int
    t: int
    min_size: MinBlockingResult
    converse: ConverseResult
    line_blocking_bound: Optional[int] = None
    line_violations: List[Violation] = []
    g4s_violations: List[Violation] = []

    def anomalies(self) -> List[str]:
        found = []
        m = self.n // 2
        if self.s * self.t > 1 and self.min_size.size != self.s + 1:
            found.append(f"smallest X-blocking set has {self.min_size.size} points, s+1 = {self.s + 1}")
        if self.s <= self.t and self.s * self.t > 1:
            if not self.converse.all_traces:
                found.append(f"{len(self.converse.non_trace_examples)}+ blocking sets are not traces")
            if any(not 1 <= d <= m for d in self.converse.d_histogram):
                found.append(f"trace distances {list(self.converse.d_histogram)} leave 1..{m}")
            if self.s < self.t and not self.converse.odd_only:
                found.append("an even-d trace blocks although s < t")
        if self.line_violations:
            found.append(f"{len(self.line_violations)} line checks fail")
        if self.g4s_violations:
            found.append(f"{len(self.g4s_violations)} (line, point) pairs meet in neither 1 nor s+1 points")
        return found
