"""
Configuration of one `gpcode report` run.

Keys may be written in snake_case or camelCase:

    {
      "geometry": {"family": "wq", "q": 2},
      "fields": [2, 3],
      "checks": ["axioms", "cx", "minwt", "traces"],
      "overrides": {"exhaustiveCap": 500000},
      "seed": 7
    }
"""

from typing import List, Literal, Optional

from pydantic import Field, field_validator, model_validator

from src.app.core.constructions.functions.families import FAMILIES
from src.app.core.fields.functions.field_tables import is_prime
from src.app.core.origin.entities.base_class import BaseClass

CheckName = Literal["axioms", "cx", "minwt", "traces", "blocking", "perp", "dualwt"]
ALL_CHECKS: List[str] = ["axioms", "cx", "minwt", "traces", "blocking", "perp", "dualwt"]


class GeometrySource(BaseClass):
    """A built-in family with its parameter, or a .gpg file."""

    family: Optional[str] = None
    q: Optional[int] = None
    dual: bool = False
    path: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "GeometrySource":
        if (self.family is None) == (self.path is None):
            raise ValueError("give exactly one of 'family' and 'path'")
        if self.family is not None:
            if self.family not in FAMILIES:
                raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
            if self.q is None:
                raise ValueError(f"family {self.family!r} needs q")
        return self

    def describe(self) -> str:
        if self.path is not None:
            return self.path
        return f"{'dual ' if self.dual else ''}{self.family}(q={self.q})"


class GuardOverrides(BaseClass):
    max_search_terms: Optional[int] = None
    exhaustive_cap: Optional[int] = None
    allow_expensive: bool = False  # lets minimum-weight searches pass w = s+2
    dual_cap: Optional[int] = 4  # searched when the dual is too large to enumerate
    dual_exhaustive_limit: Optional[int] = None
    star_samples: int = 1000


class RunConfig(BaseClass):
    geometry: GeometrySource
    n: Optional[int] = None
    fields: List[int] = Field(default_factory=lambda: [2])
    checks: List[CheckName] = Field(default_factory=lambda: list(ALL_CHECKS))
    overrides: GuardOverrides = Field(default_factory=GuardOverrides)
    output: Optional[str] = None
    seed: int = 0
    include_timing: bool = False

    @field_validator("fields")
    @classmethod
    def _primes(cls, value: List[int]) -> List[int]:
        bad = [p for p in value if not is_prime(p)]
        if bad:
            raise ValueError(f"codes are built over prime fields only; not prime: {bad}")
        return sorted(set(value))

    def wants(self, check: str) -> bool:
        return check in self.checks
