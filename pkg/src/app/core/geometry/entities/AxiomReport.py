from typing import List, Optional

from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.origin.entities.base_class import BaseClass


class Violation(BaseClass):
    """A failed axiom together with the vertices that witness it."""

    kind: str
    message: str
    witness: List[int] = []


class AxiomReport(BaseClass):
    n: int
    passed: bool
    has_order: bool
    order: Optional[OrderParams] = None
    diameter: Optional[int] = None
    girth: Optional[int] = None
    diameter_ok: bool = False
    girth_ok: bool = False
    is_thick: bool = False
    violations: List[Violation] = []


class OrderAdmissibility(BaseClass):
    n: int
    s: int
    t: int
    admissible: bool
    reasons: List[str] = []
