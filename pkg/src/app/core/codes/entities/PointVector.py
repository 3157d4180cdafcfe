"""
F-valued functions on the point set of a geometry.
"""

from dataclasses import dataclass
from typing import Iterable, List

import numpy as np

from src.app.core.fields.entities.FieldSpec import FieldSpec


@dataclass(frozen=True, eq=False)
class PointVector:
    field: FieldSpec
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.int64) % self.field.p
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, field: FieldSpec, length: int) -> "PointVector":
        return cls(field, np.zeros(length, dtype=np.int64))

    @classmethod
    def indicator(cls, field: FieldSpec, length: int, points: Iterable[int]) -> "PointVector":
        values = np.zeros(length, dtype=np.int64)
        values[list(points)] = 1
        return cls(field, values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def support(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.values)]

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def __add__(self, other: "PointVector") -> "PointVector":
        return PointVector(self.field, self.values + other.values)

    def __sub__(self, other: "PointVector") -> "PointVector":
        return PointVector(self.field, self.values - other.values)

    def scaled(self, factor: int) -> "PointVector":
        return PointVector(self.field, self.values * factor)

    def product(self, other: "PointVector") -> "PointVector":
        """Entry-wise product f . g."""
        return PointVector(self.field, self.values * other.values)

    def equals(self, other: "PointVector") -> bool:
        return self.field == other.field and np.array_equal(self.values, other.values)
