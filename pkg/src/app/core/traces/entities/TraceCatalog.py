from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional

from src.app.core.traces.entities.DistanceTrace import DistanceTrace


@dataclass
class TraceCatalog:
    """
    Distance traces of a geometry, one per distinct point set.

    A point set reached by several (d, x, y) keeps the least triple.
    """

    traces: List[DistanceTrace] = field(default_factory=list)
    index: Dict[FrozenSet[int], DistanceTrace] = field(default_factory=dict)

    @classmethod
    def from_traces(cls, traces: Iterable[DistanceTrace]) -> "TraceCatalog":
        catalog = cls()
        for trace in sorted(traces, key=lambda tr: (tr.d, tr.x, tr.y)):
            key = frozenset(trace.points)
            if key not in catalog.index:
                catalog.index[key] = trace
                catalog.traces.append(trace)
        return catalog

    def __len__(self) -> int:
        return len(self.traces)

    def lookup(self, points: Iterable[int]) -> Optional[DistanceTrace]:
        return self.index.get(frozenset(int(p) for p in points))

    def of_distance(self, d: int) -> List[DistanceTrace]:
        return [trace for trace in self.traces if trace.d == d]
