"""
Output schema for VerifyGeometry feature.
"""

from typing import List, Optional

from src.app.core.geometry.entities.AxiomReport import (
    AxiomReport,
    OrderAdmissibility,
    Violation,
)
from src.app.core.origin.entities.base_class import BaseClass


class OUTPUT_VerifyGeometry(BaseClass):
    """
    Attributes:
        axioms: Certification result with witnesses for every failed axiom
        admissibility: Feit-Higman style check of (n, s, t), when an order exists
        expected_points / expected_lines: Counts forced by the order, when defined
        intersection_violations: None when the geometry was too large to check
        notes: Checks that were skipped and why
    """

    label: str
    n: int
    num_points: int
    num_lines: int
    axioms: AxiomReport
    admissibility: Optional[OrderAdmissibility] = None
    expected_points: Optional[int] = None
    expected_lines: Optional[int] = None
    intersection_violations: Optional[List[Violation]] = None
    notes: List[str] = []

    @property
    def counts_ok(self) -> bool:
        if self.expected_points is None:
            return True
        return (self.num_points, self.num_lines) == (self.expected_points, self.expected_lines)

    def anomalies(self) -> List[str]:
        found = []
        if self.admissibility is not None and not self.admissibility.admissible:
            found.append(f"order not admissible: {'; '.join(self.admissibility.reasons)}")
        if not self.counts_ok:
            found.append(
                f"expected {self.expected_points} points and {self.expected_lines} lines, "
                f"got {self.num_points} and {self.num_lines}"
            )
        if self.intersection_violations:
            found.append(f"{len(self.intersection_violations)} intersection identities fail")
        return found
