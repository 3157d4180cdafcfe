from dataclasses import dataclass, field
from typing import Dict, List, Optional

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord
from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.codes.functions.code_build import code_build
from src.app.core.fields.entities.FieldCondition import FieldCondition
from src.app.core.fields.functions.field_operations import field_condition, field_make
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.entities.OrderParams import OrderParams
from src.app.core.reports.entities.Report import CheckRecord, FieldBlock, Observation, Report
from src.app.core.reports.entities.RunConfig import RunConfig
from src.app.core.reports.exceptions.ConfigException import ConfigException
from src.app.core.traces.entities.TraceCatalog import TraceCatalog
from src.app.core.traces.functions.distance_traces import build_trace_catalog
from src.app.infra.workers.interfaces.worker_service import WorkerService

# (family, dual) builds known to be regular; the dual of Q-(5,q) is H(3,q^2)
REGULAR_BUILDS = (("wq", False), ("hexagon", False), ("q5minus", True))


@dataclass
class PipelineState:
    """
    Everything one pipeline run has computed so far.

    Codes, field conditions and the trace catalog are built on first use and
    shared by the later stages.
    """

    config: RunConfig
    geometry: Geometry
    n: int
    report: Report
    workers: Optional[WorkerService] = None
    oracle: Optional[DistanceOracle] = None
    order: Optional[OrderParams] = None
    codes: Dict[int, LinearCode] = field(default_factory=dict)
    words: Dict[int, List[ClassifiedWord]] = field(default_factory=dict)
    catalog: Optional[TraceCatalog] = None
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def family(self) -> Optional[str]:
        return self.config.geometry.family

    @property
    def is_embedded(self) -> bool:
        """A classical family in its own coordinates, not dualised or read from file."""
        return self.family not in (None, "ngon") and not self.config.geometry.dual

    @property
    def is_regular(self) -> bool:
        """Every pair of opposite points lies in a (1, t)-subpolygon."""
        return (self.family, self.config.geometry.dual) in REGULAR_BUILDS

    @property
    def m(self) -> Optional[int]:
        return self.order.m if self.order is not None else None

    @property
    def has_even_gonality(self) -> bool:
        return self.m is not None and self.m >= 2

    def assert_check(self, check: str, passed: bool, detail: str = "", p: Optional[int] = None) -> None:
        self.report.assertions.append(CheckRecord(check=check, passed=bool(passed), detail=detail, field=p))

    def observe(self, check: str, detail: str, p: Optional[int] = None) -> None:
        self.report.observations.append(Observation(check=check, detail=detail, field=p))

    def notice(self, message: str) -> None:
        self.report.notices.append(message)

    def code(self, p: int) -> LinearCode:
        if p not in self.codes:
            self.codes[p] = code_build(self.geometry, field_make(p))
        return self.codes[p]

    def block(self, p: int) -> FieldBlock:
        block = self.report.field_block(p)
        if block is None:
            raise ConfigException(f"GF({p}) is not among the configured fields")
        return block

    def condition(self, p: int) -> Optional[FieldCondition]:
        """Field condition in GF(p); None when the gonality is odd."""
        block = self.block(p)
        if block.field_condition is None and self.has_even_gonality:
            block.field_condition = field_condition(self.order.s, self.m, field_make(p))
            block.theorem_applicable = (
                block.field_condition.holds
                and self.order.s <= self.order.t
                and self.order.is_thick
            )
        return block.field_condition

    def theorem_applicable(self, p: int) -> bool:
        self.condition(p)
        return self.block(p).theorem_applicable

    def trace_catalog(self) -> TraceCatalog:
        if self.catalog is None:
            self.catalog = build_trace_catalog(self.geometry, self.oracle)
        return self.catalog
