"""
Interface for VerifyGeometry feature helper.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from src.app.core.geometry.entities.AxiomReport import (
    AxiomReport,
    OrderAdmissibility,
    Violation,
)
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry


class INTERFACE_HELPER_VerifyGeometry(ABC):

    @abstractmethod
    async def load(self, path: str) -> Geometry:
        """
        Raises:
            GpgFormatException: the file is missing or malformed
        """
        pass

    @abstractmethod
    async def distances(self, geometry: Geometry) -> Optional[DistanceOracle]:
        """All-pairs distances, or None when the incidence graph is disconnected."""
        pass

    @abstractmethod
    async def verify(
        self, geometry: Geometry, n: int, oracle: Optional[DistanceOracle]
    ) -> AxiomReport:
        pass

    @abstractmethod
    async def admissibility(self, n: int, s: int, t: int) -> OrderAdmissibility:
        pass

    @abstractmethod
    async def expected_counts(self, n: int, s: int, t: int) -> Optional[Tuple[int, int]]:
        """(points, lines) forced by the order, or None where no formula applies."""
        pass

    @abstractmethod
    async def intersections(
        self, geometry: Geometry, oracle: DistanceOracle
    ) -> Optional[List[Violation]]:
        """Ball-intersection violations, or None when the cost guard refuses."""
        pass
