"""
Classical generalised polygons built from forms on projective spaces.

Every family enumerates the points of a variety in PG(dim-1, q) and the
projective lines contained in it. Points keep the lexicographic order of
their normalised coordinates, lines are sorted tuples of point indices,
and the line list itself is sorted, so indices are reproducible.
"""

from typing import Callable, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from src.app.core.constructions.entities.ProjectiveSpace import (
    FormTerms,
    ProjectiveSpace,
    polar_terms,
)
from src.app.core.constructions.exceptions.ConstructionException import (
    ConstructionException,
)
from src.app.core.fields.entities.FieldSpec import FieldSpec
from src.app.core.fields.exceptions.FieldException import FieldException
from src.app.core.fields.functions.field_operations import eval_integer, field_of_order
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.functions.certification import verify_polygon
from src.app.core.geometry.functions.geometry_build import geometry_build
from src.app.infra.workers.interfaces.worker_service import WorkerService

# pair_ok(a_row, rows) -> boolean mask: are a and each row collinear in the variety
PairTest = Callable[[np.ndarray, np.ndarray], np.ndarray]

SYMPLECTIC_FORM: FormTerms = ((1, 0, 1), (-1, 1, 0), (1, 2, 3), (-1, 3, 2))
PARABOLIC_Q4: FormTerms = ((1, 0, 0), (1, 1, 2), (1, 3, 4))
PARABOLIC_Q6: FormTerms = ((1, 0, 4), (1, 1, 5), (1, 2, 6), (-1, 3, 3))

# Grassmann conditions p_ij = p_kl selecting the hexagon lines of Q(6, q)
HEXAGON_CONDITIONS = (
    ((1, 2), (3, 4)),
    ((5, 4), (3, 2)),
    ((2, 0), (3, 5)),
    ((6, 5), (3, 0)),
    ((0, 1), (3, 6)),
    ((4, 6), (1, 3)),
)


def _field(q: int) -> FieldSpec:
    try:
        return field_of_order(q)
    except FieldException as e:
        raise ConstructionException(f"unsupported q={q}: {e}")


def _space(dim: int, q: int) -> ProjectiveSpace:
    try:
        return ProjectiveSpace.build(dim, _field(q))
    except ValueError as e:
        raise ConstructionException(f"unsupported q={q}: {e}")


def _lines_from(
    space: ProjectiveSpace,
    members: np.ndarray,
    starts: Iterable[int],
    pair_ok: PairTest,
) -> Set[Tuple[int, ...]]:
    """Lines through members[a] for each start position a, as ambient indices."""
    coords = space.coords[members]
    found: Set[Tuple[int, ...]] = set()
    for a in starts:
        mask = pair_ok(coords[a], coords)
        mask[: a + 1] = False
        covered: Set[int] = set()
        for b in np.flatnonzero(mask):
            b_id = int(members[b])
            if b_id in covered:
                continue
            line = space.span(int(members[a]), b_id)
            covered.update(line)
            found.add(line)
    return found


def lines_on_variety(
    space: ProjectiveSpace,
    members: Sequence[int],
    pair_ok: PairTest,
    label: str,
    workers: Optional[WorkerService] = None,
) -> Geometry:
    """
    Geometry on the given ambient points whose lines are the projective
    lines through two collinear members. Every such line must lie inside
    the member set.
    """
    members = np.asarray(sorted(members), dtype=np.int64)
    positions = range(len(members))
    if workers is None or workers.max_workers == 1:
        lines = _lines_from(space, members, positions, pair_ok)
    else:
        step = workers.max_workers
        chunks = [range(i, len(members), step) for i in range(step)]
        lines = set().union(*workers.map(lambda c: _lines_from(space, members, c, pair_ok), chunks))

    renumber = np.full(space.num_points, -1, dtype=np.int64)
    renumber[members] = np.arange(len(members))
    renumbered = sorted(tuple(int(renumber[p]) for p in line) for line in lines)
    if any(p < 0 for line in renumbered for p in line):
        raise ConstructionException.certification_failed(f"{label}: a line leaves the point set")
    return geometry_build(renumbered, len(members), label=label)


def _form_vanishes(space: ProjectiveSpace, terms: FormTerms) -> PairTest:
    return lambda a, rows: space.bilinear(terms, a[None, :], rows) == 0


def ordinary_ngon(n: int) -> Geometry:
    if n < 3:
        raise ConstructionException(f"an ordinary n-gon needs n >= 3, got {n}")
    lines = [tuple(sorted((i, (i + 1) % n))) for i in range(n)]
    return geometry_build(lines, n, label=f"ngon({n})")


def projective_plane(q: int, workers: Optional[WorkerService] = None) -> Geometry:
    """PG(2, q): all points and lines of GF(q)^3."""
    space = _space(3, q)
    everything = lambda a, rows: np.ones(len(rows), dtype=bool)
    return lines_on_variety(space, range(space.num_points), everything, f"PG(2,{q})", workers)


def symplectic_quadrangle(q: int, workers: Optional[WorkerService] = None) -> Geometry:
    """W(q): all points of PG(3, q) and its totally isotropic lines."""
    space = _space(4, q)
    pair_ok = _form_vanishes(space, SYMPLECTIC_FORM)
    return lines_on_variety(space, range(space.num_points), pair_ok, f"W({q})", workers)


def _quadric(
    space: ProjectiveSpace,
    terms: FormTerms,
    label: str,
    workers: Optional[WorkerService],
    extra: Optional[PairTest] = None,
) -> Geometry:
    members = space.zeros_of(terms)
    polar = _form_vanishes(space, polar_terms(terms))
    if extra is None:
        pair_ok = polar
    else:
        pair_ok = lambda a, rows: polar(a, rows) & extra(a, rows)
    return lines_on_variety(space, members, pair_ok, label, workers)


def parabolic_quadrangle(q: int, workers: Optional[WorkerService] = None) -> Geometry:
    """Q(4, q): the quadric x0^2 + x1 x2 + x3 x4 = 0 and its lines."""
    return _quadric(_space(5, q), PARABOLIC_Q4, f"Q(4,{q})", workers)


def first_irreducible_binary_form(field: FieldSpec) -> Tuple[int, int]:
    """Least (b, c) in code order with x^2 + bx + c irreducible over the field."""
    xs = np.arange(field.q, dtype=np.int64)
    squares = field.mul(xs, xs)
    for b in field.elements():
        for c in field.elements():
            values = field.add(field.add(squares, field.mul(b, xs)), c)
            if np.all(values != 0):
                return b, c
    raise ConstructionException(f"no irreducible quadratic over {field}")


def elliptic_quadrangle(
    q: int,
    binary_form: Optional[Tuple[int, int]] = None,
    workers: Optional[WorkerService] = None,
) -> Geometry:
    """
    Q-(5, q): zeros of f(x0, x1) + x2 x3 + x4 x5 with f = x0^2 + b x0 x1 + c x1^2.

    `binary_form` overrides (b, c); a reducible choice gives the hyperbolic
    quadric, which is not a generalised quadrangle.
    """
    space = _space(6, q)
    b, c = binary_form or first_irreducible_binary_form(space.field)
    f = space.field

    def quadratic(x: np.ndarray) -> np.ndarray:
        value = f.mul(x[..., 0], x[..., 0])
        value = f.add(value, f.mul(b, f.mul(x[..., 0], x[..., 1])))
        value = f.add(value, f.mul(c, f.mul(x[..., 1], x[..., 1])))
        value = f.add(value, f.mul(x[..., 2], x[..., 3]))
        return f.add(value, f.mul(x[..., 4], x[..., 5]))

    def polar(a: np.ndarray, rows: np.ndarray) -> np.ndarray:
        total = f.sub(f.sub(quadratic(f.add(a[None, :], rows)), quadratic(a[None, :])), quadratic(rows))
        return total == 0

    members = [int(i) for i in np.flatnonzero(quadratic(space.coords) == 0)]
    return lines_on_variety(space, members, polar, f"Q-(5,{q})", workers)


def _pluecker(f: FieldSpec, a: np.ndarray, rows: np.ndarray, i: int, j: int) -> np.ndarray:
    return f.sub(f.mul(a[i], rows[:, j]), f.mul(a[j], rows[:, i]))


def _hexagon_test(space: ProjectiveSpace) -> PairTest:
    f = space.field

    def pair_ok(a: np.ndarray, rows: np.ndarray) -> np.ndarray:
        mask = np.ones(len(rows), dtype=bool)
        for (i, j), (k, l) in HEXAGON_CONDITIONS:
            mask &= _pluecker(f, a, rows, i, j) == _pluecker(f, a, rows, k, l)
        return mask

    return pair_ok


def split_cayley_hexagon(
    q: int,
    workers: Optional[WorkerService] = None,
    certify: bool = True,
) -> Geometry:
    """
    H(q): all points of the parabolic quadric Q(6, q) and the quadric lines
    whose Grassmann coordinates satisfy the six hexagon conditions.

    The coordinate conditions are trusted only after the result passes
    certification as a generalised hexagon of order (q, q).
    """
    space = _space(7, q)
    geometry = _quadric(space, PARABOLIC_Q6, f"H({q})", workers, extra=_hexagon_test(space))
    if certify:
        report = verify_polygon(geometry, 6, workers=workers)
        order = report.order
        if not report.passed or order is None or (order.s, order.t) != (q, q):
            details = "; ".join(v.message for v in report.violations) or f"order {order}"
            raise ConstructionException.certification_failed(f"H({q}) failed certification: {details}")
    return geometry


def quadric_collinearity(q: int) -> np.ndarray:
    """(P, P) mask of distinct point pairs collinear on Q(6, q), in H(q) point order."""
    space = _space(7, q)
    members = np.asarray(space.zeros_of(PARABOLIC_Q6), dtype=np.int64)
    coords = space.coords[members]
    polar = polar_terms(PARABOLIC_Q6)
    mask = space.bilinear(polar, coords[:, None, :], coords[None, :, :]) == 0
    np.fill_diagonal(mask, False)
    return mask


def hexagon_collinear_on_quadric(
    hexagon: Geometry, oracle: DistanceOracle, q: int
) -> List[Tuple[int, int]]:
    """
    Point pairs that break: d(v, w) = 4 in H(q) iff v, w are collinear on
    Q(6, q) but not collinear in H(q). Empty when the statement holds.
    """
    quadric = quadric_collinearity(q)
    points = oracle.point_block()
    expected = quadric & (points != 2)
    bad = np.argwhere((points == 4) != expected)
    return [(int(a), int(b)) for a, b in bad]

