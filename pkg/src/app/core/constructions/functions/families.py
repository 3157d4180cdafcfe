"""
Dispatch from a family name and parameter to a construction.
"""

from typing import Dict, Optional

from src.app.core.constructions.exceptions.ConstructionException import ConstructionException
from src.app.core.constructions.functions.classical import (
    elliptic_quadrangle,
    ordinary_ngon,
    parabolic_quadrangle,
    projective_plane,
    split_cayley_hexagon,
    symplectic_quadrangle,
)
from src.app.core.constructions.functions.duality import dual_geometry
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.infra.workers.interfaces.worker_service import WorkerService

FAMILIES = ("ngon", "pg2", "wq", "q4", "q5minus", "hexagon")

# gonality of every family except ngon, whose parameter is the gonality
GONALITY: Dict[str, int] = {"pg2": 3, "wq": 4, "q4": 4, "q5minus": 4, "hexagon": 6}


def family_gonality(family: str, q: int) -> int:
    return q if family == "ngon" else GONALITY[family]


def build_family(
    family: str, q: int, dual: bool = False, workers: Optional[WorkerService] = None
) -> Geometry:
    """
    Build a classical geometry. For "ngon" the parameter q is the gonality.

    Raises:
        ConstructionException: unknown family or unsupported q
    """
    if family == "ngon":
        geometry = ordinary_ngon(q)
    elif family == "pg2":
        geometry = projective_plane(q, workers)
    elif family == "wq":
        geometry = symplectic_quadrangle(q, workers)
    elif family == "q4":
        geometry = parabolic_quadrangle(q, workers)
    elif family == "q5minus":
        geometry = elliptic_quadrangle(q, workers=workers)
    elif family == "hexagon":
        geometry = split_cayley_hexagon(q, workers)
    else:
        raise ConstructionException(f"unknown family {family!r}; expected one of {FAMILIES}")
    return dual_geometry(geometry) if dual else geometry
