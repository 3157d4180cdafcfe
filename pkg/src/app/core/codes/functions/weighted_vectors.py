"""
The weighted vectors c_v and the identities they satisfy.

For a point v of a generalised 2m-gon of order (s, t),

    c_v = sum_{k=0}^{m-1} ( sum_{j=0}^{m-k-1} (-s)^j ) i_{P_{2k}(v)}

with the integer coefficients evaluated in F. The checks below return the
violations they find; an empty list means the identity holds.
"""

from typing import List, Optional

import numpy as np

from src.app.core.codes.entities.ClassifiedWord import ClassifiedWord
from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.codes.entities.PointVector import PointVector
from src.app.core.codes.exceptions.CodeException import CodeException
from src.app.core.fields.entities.FieldSpec import FieldSpec
from src.app.core.fields.functions.field_operations import alternating_sum, eval_integer
from src.app.core.geometry.entities.AxiomReport import Violation
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.origin.entities.base_class import BaseClass


class CxLineCheck(BaseClass):
    holds: bool
    witness_line: Optional[int] = None


def cx_coefficients(s: int, m: int, field: FieldSpec) -> List[int]:
    """Coefficient of c_v on P_{2k}(v) for k = 0..m-1."""
    return [eval_integer(alternating_sum(s, m - k - 1), field) for k in range(m)]


def _order_s(geometry: Geometry) -> int:
    return len(geometry.lines[0]) - 1


def _lookup(geometry: Geometry, oracle: DistanceOracle, field: FieldSpec) -> np.ndarray:
    m = oracle.m
    if oracle.diameter % 2 or m < 2:
        raise CodeException(f"weighted vectors need a 2m-gon with m >= 2, got diameter {oracle.diameter}")
    lut = np.zeros(2 * m + 1, dtype=np.int64)
    lut[0 : 2 * m : 2] = cx_coefficients(_order_s(geometry), m, field)
    return lut


def weighted_matrix(geometry: Geometry, oracle: DistanceOracle, field: FieldSpec) -> np.ndarray:
    """(P, P) array whose row v is c_v."""
    return _lookup(geometry, oracle, field)[oracle.point_block()]


def weighted_vector(
    geometry: Geometry, oracle: DistanceOracle, v: int, field: FieldSpec
) -> PointVector:
    if not geometry.is_point(v):
        raise CodeException(f"{geometry.describe(v)} is not a point")
    lut = _lookup(geometry, oracle, field)
    return PointVector(field, lut[oracle.dist[v, : geometry.num_points]])


def verify_cx_line(
    code: LinearCode, oracle: DistanceOracle, v: int, cx: Optional[PointVector] = None
) -> CxLineCheck:
    """<c_v, i_L> = 1 for every line L; the first failing line is the witness."""
    cx = cx or weighted_vector(code.geometry, oracle, v, code.field)
    products = (code.geometry.incidence_matrix() @ cx.values) % code.field.p
    bad = np.flatnonzero(products != 1)
    if bad.size:
        return CxLineCheck(holds=False, witness_line=int(bad[0]))
    return CxLineCheck(holds=True)


def verify_cx_dual(code: LinearCode, oracle: DistanceOracle, v: int, w: int) -> bool:
    """c_v - c_w is orthogonal to every generator."""
    diff = weighted_vector(code.geometry, oracle, v, code.field) - weighted_vector(
        code.geometry, oracle, w, code.field
    )
    return not np.any((code.generators @ diff.values) % code.field.p)


def check_all_eq(code: LinearCode, oracle: DistanceOracle) -> List[int]:
    """
    Rows c of the generator and reduced matrices for which <c, c_v> depends
    on v. Indices count generator rows first, then reduced rows.
    """
    cx = weighted_matrix(code.geometry, oracle, code.field)
    rows = np.vstack([code.generators, code.rref])
    products = (rows @ cx.T) % code.field.p
    return [int(i) for i in np.flatnonzero((products != products[:, :1]).any(axis=1))]


def check_cx_support(code: LinearCode, oracle: DistanceOracle) -> List[Violation]:
    """supp(c_v) lies in P_{<=2m-2}(v), with equality iff no coefficient vanishes."""
    geometry, m = code.geometry, oracle.m
    all_nonzero = all(c != 0 for c in cx_coefficients(_order_s(geometry), m, code.field))
    support = weighted_matrix(geometry, oracle, code.field) != 0
    ball = oracle.point_block() <= 2 * m - 2
    violations = []
    for v in np.flatnonzero((support & ~ball).any(axis=1)):
        violations.append(Violation(kind="cx-support", message="c_v outside its ball", witness=[int(v)]))
    equal = (support == ball).all(axis=1)
    for v in np.flatnonzero(equal != all_nonzero):
        violations.append(
            Violation(
                kind="cx-support",
                message=f"supp(c_v) == ball is {bool(equal[v])} but coefficients nonzero is {all_nonzero}",
                witness=[int(v)],
            )
        )
    return violations


def check_covered_lines(code: LinearCode, oracle: DistanceOracle) -> List[Violation]:
    """
    When every coefficient of c_v is nonzero, each line at distance at most
    2m-3 from v is covered by c_v. Nothing is checked otherwise.
    """
    geometry, m = code.geometry, oracle.m
    s = _order_s(geometry)
    if not all(c != 0 for c in cx_coefficients(s, m, code.field)):
        return []
    support = (weighted_matrix(geometry, oracle, code.field) != 0).astype(np.int64)
    covered = (geometry.incidence_matrix() @ support.T) == s + 1
    near = oracle.line_point_block() <= 2 * m - 3
    return [
        Violation(
            kind="covered-line",
            message=f"line {int(j)} is near p{int(v)} but not covered by c_v",
            witness=[int(v), geometry.vertex_of_line(int(j))],
        )
        for j, v in np.argwhere(near & ~covered)
    ]


def word_vector(code: LinearCode, word: ClassifiedWord) -> np.ndarray:
    values = np.zeros(code.length, dtype=np.int64)
    values[word.support] = word.coefficients
    return values


def check_min_word_lemmas(
    code: LinearCode,
    oracle: DistanceOracle,
    words: List[ClassifiedWord],
    field_dependent: bool = True,
) -> List[Violation]:
    """
    Identities for codewords c of weight s+1.

    Always: for u in supp(c) and a line L through u, some w in
    P_{<=2m-3}(L) has <c_w . i_L, c> = <c_w, c>.
    With `field_dependent` (field condition holds and s <= t):
    <c, c_v> != 0 for every point v, and supp(c) is X-blocking.
    """
    geometry, m, p = code.geometry, oracle.m, code.field.p
    s = _order_s(geometry)
    cx = weighted_matrix(geometry, oracle, code.field)
    opposite = oracle.opposite_points()
    near = oracle.line_point_block() <= 2 * m - 3
    violations: List[Violation] = []

    for word in words:
        if word.weight != s + 1:
            continue
        c = word_vector(code, word)
        full = (cx @ c) % p

        if field_dependent:
            zeros = np.flatnonzero(full == 0)
            if zeros.size:
                violations.append(
                    Violation(kind="non-vanishing", message=f"<c, c_v> = 0 for word {word.support}", witness=[int(zeros[0])])
                )
            unblocked = np.flatnonzero(opposite[:, word.support].all(axis=1))
            if unblocked.size:
                violations.append(
                    Violation(kind="x-blocking", message=f"support {word.support} is not X-blocking", witness=[int(unblocked[0])])
                )

        for u in word.support:
            for line in geometry.lines_on_point[u]:
                points = list(geometry.lines[line])
                restricted = (cx[:, points] @ c[points]) % p
                if not np.any(near[line] & (restricted == full)):
                    violations.append(
                        Violation(
                            kind="line-lemma",
                            message=f"no point near line {line} for word {word.support}",
                            witness=[u, geometry.vertex_of_line(line)],
                        )
                    )
    return violations
