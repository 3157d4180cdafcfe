"""
A linear code over a prime field together with its row-reduced data.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.app.core.codes.functions.modular import nullspace_mod, rref_mod
from src.app.core.fields.entities.FieldSpec import FieldSpec
from src.app.core.geometry.entities.Geometry import Geometry


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    Row space of `generators` over GF(p), with coordinates indexed by the
    points of `geometry`.

    `rref` holds the nonzero rows of the reduced echelon form (leftmost
    pivots, rows processed in generator order) and `parity_check` a basis of
    the dual code, so v is a codeword iff parity_check @ v = 0.
    """

    geometry: Geometry
    field: FieldSpec
    generators: np.ndarray
    rref: np.ndarray
    pivots: Tuple[int, ...]
    parity_check: np.ndarray
    is_dual: bool = False

    @classmethod
    def from_generators(
        cls, geometry: Geometry, field: FieldSpec, generators: np.ndarray, is_dual: bool = False
    ) -> "LinearCode":
        p = field.p
        generators = np.asarray(generators, dtype=np.int64) % p
        reduced, pivots = rref_mod(generators, p)
        reduced = reduced[: len(pivots)]
        parity = nullspace_mod(reduced, p, num_columns=generators.shape[1])
        for array in (generators, reduced, parity):
            array.setflags(write=False)
        return cls(geometry, field, generators, reduced, tuple(pivots), parity, is_dual)

    @property
    def length(self) -> int:
        return self.generators.shape[1]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def dual_dimension(self) -> int:
        return self.length - self.rank

    @property
    def s(self) -> int:
        """Points per line minus one for the underlying geometry."""
        return len(self.geometry.lines[0]) - 1

    def dual(self) -> "LinearCode":
        return LinearCode.from_generators(
            self.geometry, self.field, self.parity_check, is_dual=not self.is_dual
        )
