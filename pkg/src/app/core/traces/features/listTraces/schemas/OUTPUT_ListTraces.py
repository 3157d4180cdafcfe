from typing import Dict, List

from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.DistanceTrace import DistanceTrace


class OUTPUT_ListTraces(BaseClass):
    """Distinct traces for one d; `blocking` counts those that are X-blocking."""

    label: str
    d: int
    m: int
    traces: List[DistanceTrace]
    size_histogram: Dict[int, int]
    blocking: int
