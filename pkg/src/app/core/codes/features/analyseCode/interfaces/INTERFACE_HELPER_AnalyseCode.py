"""
Interface for AnalyseCode feature helper.
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord, MinWeightResult
from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams


class INTERFACE_HELPER_AnalyseCode(ABC):

    @abstractmethod
    async def load(self, path: str) -> Geometry:
        pass

    @abstractmethod
    async def certify(self, geometry: Geometry) -> Optional[Tuple[DistanceOracle, OrderParams]]:
        """Distances and order, or None when the geometry is not a generalised polygon."""
        pass

    @abstractmethod
    async def build_code(self, geometry: Geometry, p: int) -> LinearCode:
        """
        Raises:
            FieldException: p is not prime
        """
        pass

    @abstractmethod
    async def field_condition(self, s: int, m: int, p: int) -> FieldCondition:
        pass

    @abstractmethod
    async def min_weight(self, code: LinearCode, allow_expensive: bool) -> MinWeightResult:
        """
        Raises:
            CostGuardExceededException: the search would pass its budget
        """
        pass

    @abstractmethod
    async def low_weight(
        self, code: LinearCode, w_max: int, allow_expensive: bool
    ) -> List[ClassifiedWord]:
        pass

    @abstractmethod
    async def classify(
        self, geometry: Geometry, oracle: DistanceOracle, words: List[ClassifiedWord], s: int
    ) -> List[ClassifiedWord]:
        """Fill in `trace_match` on every word of weight s+1."""
        pass
