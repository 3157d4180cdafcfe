"""
The points of PG(dim-1, q) as normalised coordinate vectors.

Points are the vectors of GF(q)^dim whose first nonzero coordinate is 1,
listed in lexicographic order of their element codes. A vector is looked up
through its code sum_i v_i q^(dim-1-i).
"""

from dataclasses import dataclass
from dataclasses import field as dataclass_field
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from src.app.core.fields.entities.FieldSpec import FieldSpec
from src.app.core.fields.functions.field_operations import eval_integer

# (coefficient, i, j) stands for coefficient * x_i * y_j
FormTerms = Sequence[Tuple[int, int, int]]

MAX_AMBIENT_VECTORS = 2**22


def _is_normalised(vector: Sequence[int]) -> bool:
    for c in vector:
        if c:
            return c == 1
    return False


@dataclass(frozen=True, eq=False)
class ProjectiveSpace:
    dim: int
    field: FieldSpec
    coords: np.ndarray = dataclass_field(repr=False)
    index_of_code: np.ndarray = dataclass_field(repr=False)

    @classmethod
    def build(cls, dim: int, field: FieldSpec) -> "ProjectiveSpace":
        q = field.q
        if q**dim > MAX_AMBIENT_VECTORS:
            raise ValueError(f"GF({q})^{dim} is too large to enumerate")
        rows = [v for v in product(range(q), repeat=dim) if _is_normalised(v)]
        coords = np.asarray(rows, dtype=np.int64)
        weights = q ** np.arange(dim - 1, -1, -1, dtype=np.int64)
        index = np.full(q**dim, -1, dtype=np.int64)
        index[coords @ weights] = np.arange(len(coords))
        coords.setflags(write=False)
        index.setflags(write=False)
        return cls(dim=dim, field=field, coords=coords, index_of_code=index)

    @property
    def num_points(self) -> int:
        return len(self.coords)

    def normalise(self, vectors: np.ndarray) -> np.ndarray:
        """Scale each nonzero row so that its first nonzero entry is 1."""
        vectors = np.atleast_2d(vectors)
        lead_pos = np.argmax(vectors != 0, axis=1)
        lead = vectors[np.arange(len(vectors)), lead_pos]
        return self.field.mul(vectors, self.field.inv(lead)[:, None])

    def index(self, vectors: np.ndarray) -> np.ndarray:
        weights = self.field.q ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)
        return self.index_of_code[self.normalise(vectors) @ weights]

    def span(self, a: int, b: int) -> Tuple[int, ...]:
        """Sorted point indices of the line through points a != b."""
        f = self.field
        lam = np.arange(f.q, dtype=np.int64)[:, None]
        others = f.add(f.mul(lam, self.coords[a][None, :]), self.coords[b][None, :])
        return tuple(sorted({a, *(int(i) for i in self.index(others))}))

    def bilinear(self, terms: FormTerms, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """sum c * x_i * y_j over the terms, evaluated row-wise with broadcasting."""
        f = self.field
        total = np.zeros(np.broadcast_shapes(x.shape[:-1], y.shape[:-1]), dtype=np.int64)
        for c, i, j in terms:
            total = f.add(total, f.mul(eval_integer(c, f), f.mul(x[..., i], y[..., j])))
        return total

    def quadratic(self, terms: FormTerms, x: np.ndarray) -> np.ndarray:
        return self.bilinear(terms, x, x)

    def zeros_of(self, terms: FormTerms) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.quadratic(terms, self.coords) == 0)]


def polar_terms(terms: FormTerms) -> List[Tuple[int, int, int]]:
    """Terms of the polar form Q(x+y) - Q(x) - Q(y) of a quadratic form."""
    return [t for c, i, j in terms for t in ((c, i, j), (c, j, i))]
