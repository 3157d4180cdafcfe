"""
Output schema for ConstructGeometry feature.
"""

from typing import Optional

from src.app.core.origin.entities.base_class import BaseClass


class OUTPUT_ConstructGeometry(BaseClass):
    """
    Attributes:
        label: Name of the built geometry, e.g. "W(2)" or "dual H(2)"
        n: Gonality the family is built to have
        out: Path of the written .gpg file, if any
    """

    family: str
    q: int
    dual: bool
    label: str
    n: int
    num_points: int
    num_lines: int
    out: Optional[str] = None
