"""
X-blocking sets, line-blocking sets and the star witness.

A point set B is X-blocking when every point v has some b in B at distance
at most 2m-2, that is, no point is opposite every member of B.
"""

import itertools
from collections import Counter
from math import comb
from typing import Iterator, List, Optional, Sequence

import numpy as np

from src.app.core.geometry.entities.AxiomReport import Violation
from src.app.core.geometry.entities.DistanceOracle import DistanceOracle
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.core.traces.entities.BlockingVerdict import (
    BlockingVerdict,
    ConverseResult,
    MinBlockingResult,
    StarWitness,
)
from src.app.core.traces.entities.TraceCatalog import TraceCatalog
from src.app.core.traces.exceptions.TraceException import (
    TraceException,
    WitnessNotFoundException,
)
from src.app.infra.dotenv.services.service_dotenv import get_service_dotenv
from src.app.infra.workers.interfaces.worker_service import WorkerService

BATCH_SUBSETS = 8192


def _points(geometry: Geometry, values: Sequence[int]) -> np.ndarray:
    arr = np.asarray(sorted(set(int(v) for v in values)), dtype=np.int64)
    if arr.size and (arr[0] < 0 or arr[-1] >= geometry.num_points):
        raise TraceException(f"point set {list(values)} leaves 0..{geometry.num_points - 1}")
    return arr


def is_x_blocking(
    geometry: Geometry, oracle: DistanceOracle, points: Sequence[int]
) -> BlockingVerdict:
    """
    Raises:
        TraceException: the set is empty
    """
    b = _points(geometry, points)
    if b.size == 0:
        raise TraceException("an empty point set cannot be tested for blocking")
    unblocked = np.flatnonzero(oracle.opposite_points()[:, b].all(axis=1))
    if unblocked.size:
        return BlockingVerdict(is_blocking=False, witness=int(unblocked[0]))
    return BlockingVerdict(is_blocking=True)


def _subset_batches(num_points: int, k: int) -> Iterator[np.ndarray]:
    combos = itertools.combinations(range(num_points), k)
    while True:
        chunk = list(itertools.islice(combos, BATCH_SUBSETS))
        if not chunk:
            return
        yield np.asarray(chunk, dtype=np.int64).reshape(len(chunk), k)


def _blocking_rows(opposite: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    # (P, C, k) -> some point opposite a whole subset means it does not block
    unblocked = opposite[:, subsets].all(axis=2).any(axis=0)
    return subsets[~unblocked]


def _cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_service_dotenv().GPCODE_EXHAUSTIVE_CAP


def blocking_sets_of_size(
    geometry: Geometry,
    oracle: DistanceOracle,
    k: int,
    cap: Optional[int] = None,
    workers: Optional[WorkerService] = None,
    first_only: bool = False,
) -> List[List[int]]:
    """
    All X-blocking sets of exactly k points, in lexicographic order.

    Raises:
        CostGuardExceededException: C(P, k) exceeds the subset cap
    """
    total = comb(geometry.num_points, k)
    limit = _cap(cap)
    if total > limit:
        raise CostGuardExceededException(
            f"C({geometry.num_points}, {k}) = {total} subsets exceeds the cap of {limit}"
        )
    opposite = oracle.opposite_points()
    found: List[List[int]] = []
    batches = _subset_batches(geometry.num_points, k)
    if workers is None or workers.max_workers == 1 or first_only:
        for batch in batches:
            found.extend(row.tolist() for row in _blocking_rows(opposite, batch))
            if first_only and found:
                return found[:1]
        return found
    for rows in workers.map(lambda batch: _blocking_rows(opposite, batch), batches):
        found.extend(row.tolist() for row in rows)
    return found


def min_x_blocking_size(
    geometry: Geometry,
    oracle: DistanceOracle,
    s: int,
    cap: Optional[int] = None,
    strict: bool = True,
    workers: Optional[WorkerService] = None,
) -> MinBlockingResult:
    """
    Smallest size of an X-blocking set, searched upward from 1.

    Sizes 1..s are enumerated exhaustively. If none blocks, the points of
    line 0 are checked and reported as a set of size s+1.

    Raises:
        CostGuardExceededException: a size below s+1 cannot be enumerated
            within the cap and `strict` is set
    """
    checked = 0
    for k in range(1, s + 1):
        try:
            found = blocking_sets_of_size(
                geometry, oracle, k, cap=cap, workers=workers, first_only=True
            )
        except CostGuardExceededException:
            if strict:
                raise
            return _line_example(geometry, oracle, "found", checked)
        checked += comb(geometry.num_points, k)
        if found:
            return MinBlockingResult(
                size=k, certificate="exhaustive", example=found[0], candidates_checked=checked
            )
    return _line_example(geometry, oracle, "exhaustive", checked)


def _line_example(
    geometry: Geometry, oracle: DistanceOracle, certificate: str, checked: int
) -> MinBlockingResult:
    line = list(geometry.lines[0])
    verdict = is_x_blocking(geometry, oracle, line)
    if not verdict.is_blocking:
        raise WitnessNotFoundException(
            f"points of line 0 do not block: p{verdict.witness} is opposite all of them",
            context=line,
        )
    return MinBlockingResult(
        size=len(line), certificate=certificate, example=line, candidates_checked=checked
    )


def check_blocking_converse(
    geometry: Geometry,
    oracle: DistanceOracle,
    s: int,
    catalog: TraceCatalog,
    cap: Optional[int] = None,
    workers: Optional[WorkerService] = None,
) -> ConverseResult:
    """
    Enumerates every X-blocking set of size s+1 and matches it to a trace.

    `odd_only` records whether all matched traces have odd d, which is
    expected when s < t.
    """
    blocking = blocking_sets_of_size(geometry, oracle, s + 1, cap=cap, workers=workers)
    d_counts: Counter = Counter()
    strays: List[List[int]] = []
    for subset in blocking:
        trace = catalog.lookup(subset)
        if trace is None:
            strays.append(subset)
        else:
            d_counts[trace.d] += 1
    odd_only = all(d % 2 == 1 for d in d_counts)
    return ConverseResult(
        size=s + 1,
        candidates=comb(geometry.num_points, s + 1),
        blocking=len(blocking),
        all_traces=not strays,
        non_trace_examples=strays[:10],
        d_histogram=dict(sorted(d_counts.items())),
        odd_only=odd_only,
    )


def is_line_blocking(geometry: Geometry, points: Sequence[int]) -> bool:
    """True when every line contains a point of the set."""
    chosen = set(_points(geometry, points).tolist())
    return all(chosen.intersection(line) for line in geometry.lines)


def line_blocking_bound(geometry: Geometry, s: int, t: int) -> int:
    """
    Lower bound (s^m t^m - 1) / (st - 1) on the size of a line-blocking set.

    Equals P / (1 + s) since P = (1 + s)(s^m t^m - 1) / (st - 1).
    """
    if s * t == 1:
        raise TraceException("line-blocking bound is undefined when s = t = 1")
    return geometry.num_points // (1 + s)


def lines_blocking_survey(
    geometry: Geometry, oracle: DistanceOracle, s: int, t: int
) -> List[Violation]:
    """
    Each line's point set must be X-blocking and, when the bound exceeds
    s+1, must not be line-blocking.
    """
    violations = []
    bound = line_blocking_bound(geometry, s, t)
    for index, line in enumerate(geometry.lines):
        verdict = is_x_blocking(geometry, oracle, line)
        if not verdict.is_blocking:
            violations.append(
                Violation(
                    kind="line-not-x-blocking",
                    message=f"line {index} misses p{verdict.witness}",
                    witness=[geometry.vertex_of_line(index), int(verdict.witness)],
                )
            )
        elif bound > s + 1 and is_line_blocking(geometry, line):
            violations.append(
                Violation(
                    kind="line-is-line-blocking",
                    message=f"line {index} meets every line",
                    witness=[geometry.vertex_of_line(index)],
                )
            )
    return violations


def check_g4s(geometry: Geometry, oracle: DistanceOracle, s: int) -> List[Violation]:
    """
    Every line L and point v: |P_1(L) & P_{<=2m-2}(v)| is 1 or s+1.
    """
    near = (oracle.point_block() <= 2 * oracle.m - 2).astype(np.int64)
    counts = geometry.incidence_matrix() @ near  # (L, P)
    bad = np.argwhere((counts != 1) & (counts != s + 1))
    return [
        Violation(
            kind="g4s",
            message=f"line {int(line)} has {int(counts[line, v])} points near p{int(v)}",
            witness=[geometry.vertex_of_line(int(line)), int(v)],
        )
        for line, v in bad
    ]


def star_witness(
    geometry: Geometry,
    oracle: DistanceOracle,
    points: Sequence[int],
    line: int,
    d: int,
    s: int,
) -> StarWitness:
    """
    For a point set C of fewer than s+1 points, a line M within 2d-2 of
    `line` and a point v within 2d-1 of `line` whose neighbourhoods meet C
    exactly where `line` does:

        C & P_{<=2d-1}(M) = C & P_1(line) = C & P_{<=2d}(v)

    Candidates are tried by increasing distance from `line`, then by index.

    Raises:
        TraceException: C has s+1 or more points, or d is outside 1..m-1
        WitnessNotFoundException: no such M or no such v exists
    """
    c = _points(geometry, points)
    if c.size >= s + 1:
        raise TraceException(f"star witness needs fewer than {s + 1} points, got {c.size}")
    if not 1 <= d <= oracle.m - 1:
        raise TraceException(f"star witness distance d={d} is outside 1..{oracle.m - 1}")
    vertex = geometry.vertex_of_line(line)
    target = np.isin(c, geometry.lines[line])
    row = oracle.dist[vertex]

    def first_match(candidates: np.ndarray, radius: int) -> Optional[int]:
        order = np.lexsort((candidates, row[candidates]))
        for cand in candidates[order]:
            if np.array_equal(oracle.dist[cand, c] <= radius, target):
                return int(cand)
        return None

    lines = np.flatnonzero(row[geometry.num_points :] <= 2 * d - 2) + geometry.num_points
    m_vertex = first_match(lines, 2 * d - 1)
    if m_vertex is None:
        raise WitnessNotFoundException(
            f"no line within {2 * d - 2} of line {line} sees C like line {line}",
            context=[vertex] + c.tolist(),
        )
    pts = np.flatnonzero(row[: geometry.num_points] <= 2 * d - 1)
    v = first_match(pts, 2 * d)
    if v is None:
        raise WitnessNotFoundException(
            f"no point within {2 * d - 1} of line {line} sees C like line {line}",
            context=[vertex] + c.tolist(),
        )
    return StarWitness(line=geometry.line_of_vertex(m_vertex), point=v)
