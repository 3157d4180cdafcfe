from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.traces.entities.DistanceTrace import DistanceTrace


class INTERFACE_HELPER_ListTraces(ABC):

    @abstractmethod
    async def load_polygon(self, path: str, n: Optional[int]) -> Tuple[Geometry, DistanceOracle]:
        pass

    @abstractmethod
    async def traces(self, geometry: Geometry, oracle: DistanceOracle, d: int) -> List[DistanceTrace]:
        """
        Raises:
            TraceException: d outside 1..m
        """
        pass

    @abstractmethod
    async def is_blocking(self, geometry: Geometry, oracle: DistanceOracle, trace: DistanceTrace) -> bool:
        pass
