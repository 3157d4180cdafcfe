"""
A finite field GF(p^h) with exact arithmetic.

Elements (FieldElem) are plain integers in [0, q). For h = 1 the integer is
the residue itself; for h > 1 its base-p digits, least significant first,
are the coefficient vector of the element. `to_coefficients` and
`from_coefficients` convert between the two views.

Every arithmetic method accepts Python ints or numpy integer arrays and
returns the same kind.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import Field

from src.app.core.fields.functions.field_tables import FieldTables, build_tables
from src.app.core.origin.entities.base_class import FrozenClass

FieldElem = int
Operand = Union[int, np.ndarray]


class FieldSpec(FrozenClass):
    p: int
    h: int = 1
    modulus: Tuple[int, ...] = Field(default=())

    @property
    def q(self) -> int:
        return self.p**self.h

    @property
    def is_prime_field(self) -> bool:
        return self.h == 1

    @property
    def tables(self) -> FieldTables:
        return build_tables(self.p, self.h, self.modulus)

    def __str__(self) -> str:
        return f"GF({self.q})"

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def to_coefficients(self, a: FieldElem) -> List[int]:
        return [int(c) for c in self.tables.digits[a]]

    def from_coefficients(self, coefficients: Sequence[int]) -> FieldElem:
        coefficients = [c % self.p for c in coefficients]
        return int(sum(c * self.p**i for i, c in enumerate(coefficients)))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _wrap(self, value, like: Operand) -> Operand:
        if isinstance(like, np.ndarray):
            return value
        return int(value)

    def add(self, a: Operand, b: Operand) -> Operand:
        like = a if isinstance(a, np.ndarray) else b
        if self.h == 1:
            return self._wrap((np.asarray(a) + np.asarray(b)) % self.p, like)
        t = self.tables
        total = (t.digits[a] + t.digits[b]) % self.p
        return self._wrap(total @ t.weights, like)

    def neg(self, a: Operand) -> Operand:
        if self.h == 1:
            return self._wrap((-np.asarray(a)) % self.p, a)
        return self._wrap(self.tables.neg[a], a)

    def sub(self, a: Operand, b: Operand) -> Operand:
        return self.add(a, self.neg(b))

    def mul(self, a: Operand, b: Operand) -> Operand:
        like = a if isinstance(a, np.ndarray) else b
        if self.h == 1:
            return self._wrap((np.asarray(a) * np.asarray(b)) % self.p, like)
        t = self.tables
        a_arr, b_arr = np.asarray(a), np.asarray(b)
        product = t.exp[t.log[a_arr] + t.log[b_arr]]
        return self._wrap(np.where((a_arr == 0) | (b_arr == 0), 0, product), like)

    def inv(self, a: Operand) -> Operand:
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self._wrap(self.tables.inv[a], a)

    def div(self, a: Operand, b: Operand) -> Operand:
        return self.mul(a, self.inv(b))

    def power(self, a: FieldElem, k: int) -> FieldElem:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result
