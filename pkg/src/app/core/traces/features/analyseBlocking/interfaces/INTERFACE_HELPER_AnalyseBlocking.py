"""
Interface for AnalyseBlocking feature helper.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from src.app.core.geometry.entities.AxiomReport import Violation
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.traces.entities.BlockingVerdict import ConverseResult, MinBlockingResult


class INTERFACE_HELPER_AnalyseBlocking(ABC):

    @abstractmethod
    async def load_polygon(
        self, path: str, n: Optional[int]
    ) -> Tuple[Geometry, DistanceOracle, OrderParams]:
        """
        Raises:
            GpgFormatException: unreadable file
            PolygonCertificationException: not a generalised polygon
            TraceException: the gonality is odd
        """
        pass

    @abstractmethod
    async def min_size(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, cap: Optional[int]
    ) -> MinBlockingResult:
        pass

    @abstractmethod
    async def converse(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, cap: Optional[int]
    ) -> ConverseResult:
        pass

    @abstractmethod
    async def line_checks(
        self, geometry: Geometry, oracle: DistanceOracle, s: int, t: int
    ) -> Tuple[Optional[int], List[Violation]]:
        """Line-blocking bound and the per-line checks (no bound when st = 1)."""
        pass

    @abstractmethod
    async def g4s(self, geometry: Geometry, oracle: DistanceOracle, s: int) -> List[Violation]:
        pass
