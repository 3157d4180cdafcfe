from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.traces.entities.PerpGeometry import PerpGeometry, PerpVariant


class INTERFACE_HELPER_AnalysePerp(ABC):

    @abstractmethod
    async def load_polygon(self, path: str, n: Optional[int]) -> Tuple[Geometry, DistanceOracle]:
        """
        Raises:
            PolygonCertificationException: the geometry is not a generalised polygon
            TraceException: odd gonality
        """
        pass

    @abstractmethod
    async def perp(
        self, geometry: Geometry, oracle: DistanceOracle, x: int, variant: PerpVariant
    ) -> PerpGeometry:
        pass

    @abstractmethod
    async def is_projective(self, perp: PerpGeometry) -> bool:
        pass

    @abstractmethod
    async def unblocking_opposites(self, geometry: Geometry, oracle: DistanceOracle, x: int) -> List[int]:
        pass
