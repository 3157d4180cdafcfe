from typing import List

from src.app.core.origin.entities.base_class import BaseClass


class PartialSum(BaseClass):
    """One alternating sum 1 - s + s^2 - ... + (-s)^k, over the integers and in F."""

    k: int
    integer_value: int
    field_value: int


class FieldCondition(BaseClass):
    holds: bool
    failing_k: List[int]
    partial_sums: List[PartialSum]
