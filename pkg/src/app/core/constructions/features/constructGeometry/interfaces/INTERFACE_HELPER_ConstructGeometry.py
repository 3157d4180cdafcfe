"""
Interface for ConstructGeometry feature helper.
"""

from abc import ABC, abstractmethod

from src.app.core.geometry.entities.Geometry import Geometry


class INTERFACE_HELPER_ConstructGeometry(ABC):

    @abstractmethod
    async def build(self, family: str, q: int, dual: bool) -> Geometry:
        """
        Build a classical geometry.

        Raises:
            ConstructionException: unknown family, unsupported q, or a
                construction that failed its own certification
        """
        pass

    @abstractmethod
    async def gonality(self, family: str, q: int) -> int:
        pass

    @abstractmethod
    async def export(self, geometry: Geometry, destination: str) -> None:
        """Write the geometry in .gpg format."""
        pass
