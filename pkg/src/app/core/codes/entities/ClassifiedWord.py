from typing import List, Optional

from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.DistanceTrace import TraceRef


class ClassifiedWord(BaseClass):
    """
    A codeword up to scalars: the first nonzero coefficient is 1.

    `coefficients[i]` is the value on `support[i]`. `trace_match` is filled
    in once the support has been compared with the distance traces.
    """

    weight: int
    support: List[int]
    coefficients: List[int]
    trace_match: Optional[TraceRef] = None
    is_line_multiple: bool = False

    def sort_key(self):
        return self.weight, tuple(self.support), tuple(self.coefficients)


class MinWeightResult(BaseClass):
    weight: int
    words: List[ClassifiedWord]


class DualWeightResult(BaseClass):
    """
    Minimum weight of the dual code, or the certificate that no dual word of
    weight <= cap exists (`weight` is None and `exceeds_cap` is set).
    """

    weight: Optional[int] = None
    exceeds_cap: bool = False
    cap: Optional[int] = None
    method: str
    bound: Optional[int] = None
