"""
Output schema for AnalyseCode feature.
"""

from typing import Dict, List, Optional

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.origin.entities.base_class import BaseClass


class OUTPUT_AnalyseCode(BaseClass):
    """
    Attributes:
        s, t, n: Order and gonality when the geometry is a generalised polygon
        theorem_applicable: field condition holds, s <= t and the polygon is thick
        min_weight: Smallest nonzero weight, when requested
        words: Codewords up to scalars, of weight <= w_max or of minimum weight
        classification: Count of words of weight s+1 per trace distance d
    """

    label: str
    p: int
    length: int
    rank: int
    dual_dimension: int
    n: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    field_condition: Optional[FieldCondition] = None
    theorem_applicable: bool = False
    min_weight: Optional[int] = None
    words: List[ClassifiedWord] = []
    line_multiples: int = 0
    classification: Dict[int, int] = {}
    unclassified: int = 0

    def anomalies(self) -> List[str]:
        if not self.theorem_applicable or self.s is None:
            return []
        found = []
        if self.min_weight is not None and self.min_weight != self.s + 1:
            found.append(f"minimum weight {self.min_weight} differs from s+1 = {self.s + 1}")
        if self.unclassified:
            found.append(f"{self.unclassified} minimum-weight supports are not distance traces")
        return found
