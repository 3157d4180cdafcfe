"""
Records written by the report pipeline.

Assertions are checks whose hypotheses hold on the run and must pass;
a failed assertion is an anomaly. Observations record data without a
verdict. Notices record searches that stopped at a cost guard.
"""

from typing import Dict, List, Optional

from src.app.core.codes.entities.ClassifiedWord import DualWeightResult
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.geometry.entities.AxiomReport import AxiomReport
from src.app.core.origin.entities.base_class import BaseClass
from src.app.core.traces.entities.BlockingVerdict import (
    ConverseResult,
    MinBlockingResult,
    TraceCensusEntry,
)


class CheckRecord(BaseClass):
    check: str
    passed: bool
    detail: str = ""
    field: Optional[int] = None


class Observation(BaseClass):
    check: str
    detail: str
    field: Optional[int] = None


class GeometryBlock(BaseClass):
    source: str
    label: str
    num_points: int
    num_lines: int
    n: int
    s: Optional[int] = None
    t: Optional[int] = None
    is_thick: bool = False


class FieldBlock(BaseClass):
    p: int
    field_condition: Optional[FieldCondition] = None
    theorem_applicable: bool = False
    rank: Optional[int] = None
    dual_dimension: Optional[int] = None
    min_weight: Optional[int] = None
    min_weight_words: Optional[int] = None
    line_multiples: Optional[int] = None
    classification: Dict[int, int] = {}
    unclassified: Optional[int] = None
    dual: Optional[DualWeightResult] = None


class BlockingBlock(BaseClass):
    min_size: Optional[MinBlockingResult] = None
    converse: Optional[ConverseResult] = None
    line_blocking_bound: Optional[int] = None


class PerpBlock(BaseClass):
    points: int
    projective_augmented: int
    projective_literal: int
    trace_blocking_failures: List[int] = []


class Report(BaseClass):
    geometry: Optional[GeometryBlock] = None
    axioms: Optional[AxiomReport] = None
    fields: List[FieldBlock] = []
    trace_census: List[TraceCensusEntry] = []
    blocking: Optional[BlockingBlock] = None
    perp: Optional[PerpBlock] = None
    assertions: List[CheckRecord] = []
    observations: List[Observation] = []
    anomalies: List[CheckRecord] = []
    notices: List[str] = []
    aborted: bool = False
    abort_reason: Optional[str] = None
    seed: int = 0
    timing: Optional[Dict[str, float]] = None

    def field_block(self, p: int) -> Optional[FieldBlock]:
        return next((block for block in self.fields if block.p == p), None)
