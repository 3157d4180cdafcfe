from typing import Dict, List, Literal, Optional

from src.app.core.origin.entities.base_class import BaseClass


class BlockingVerdict(BaseClass):
    """`witness` is a point opposite every point of the set, present iff not blocking."""

    is_blocking: bool
    witness: Optional[int] = None


class MinBlockingResult(BaseClass):
    """
    Smallest X-blocking set size.

    "exhaustive": every smaller size was ruled out by full enumeration.
    "found": an example is shown but smaller sizes were not enumerated.
    """

    size: int
    certificate: Literal["exhaustive", "found"]
    example: List[int]
    candidates_checked: int = 0


class StarWitness(BaseClass):
    line: int
    point: int


class ConverseResult(BaseClass):
    """Classification of every X-blocking set of a given size."""

    size: int
    candidates: int
    blocking: int
    all_traces: bool
    non_trace_examples: List[List[int]] = []
    d_histogram: Dict[int, int] = {}
    odd_only: bool = True


class TraceCensusEntry(BaseClass):
    d: int
    distinct: int
    size_histogram: Dict[int, int]
    blocking: int
