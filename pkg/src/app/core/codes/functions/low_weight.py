"""
Exact enumeration of low-weight codewords.

A vector with support S is a codeword iff the columns of the parity-check
matrix indexed by S admit a dependency whose coefficients are all nonzero.
Words are searched weight by weight with a meet-in-the-middle split: the
first ceil(w/2) support positions (leading coefficient fixed to 1) on the
left, the remaining positions on the right, and the two halves are joined
on equal syndromes. Every word up to scalars is produced exactly once.
"""

import itertools
from math import comb
from typing import FrozenSet, Iterator, List, Optional, Set, Tuple

import numpy as np

from src.app.core.codes.entities.ClassifiedWord import (
    ClassifiedWord,
    DualWeightResult,
    MinWeightResult,
)
from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.codes.exceptions.CodeException import CodeException
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.infra.dotenv.services.service_dotenv import get_service_dotenv
from src.app.infra.workers.interfaces.worker_service import WorkerService

BATCH_ENTRIES = 1 << 21
ROW_SPACE_LIMIT = 1 << 20


def _combinations(n: int, k: int) -> np.ndarray:
    rows = list(itertools.combinations(range(n), k))
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), k)


def _patterns(p: int, length: int, leading_one: bool) -> np.ndarray:
    free = length - 1 if leading_one and length else length
    head = (1,) if leading_one and length else ()
    rows = [head + tail for tail in itertools.product(range(1, p), repeat=free)]
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), length)


def search_terms(n: int, w: int, p: int) -> int:
    """Left plus right table sizes for weight w."""
    a, b = (w + 1) // 2, w // 2
    return comb(n, a) * (p - 1) ** (a - 1) + comb(n, b) * (p - 1) ** b


def _syndromes(h_t: np.ndarray, combos: np.ndarray, patterns: np.ndarray, p: int) -> np.ndarray:
    """(C * N, r) syndromes, combination-major."""
    columns = h_t[combos]  # (C, k, r)
    syn = np.einsum("ckr,nk->cnr", columns, patterns) % p
    return syn.reshape(-1, h_t.shape[1])


def _join(left: np.ndarray, right: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Index pairs (i, j) with left[i] == right[j] as rows."""
    _, ids = np.unique(np.vstack([left, right]), axis=0, return_inverse=True)
    ids = ids.ravel()
    left_ids, right_ids = ids[: len(left)], ids[len(left) :]
    order = np.argsort(right_ids, kind="stable")
    sorted_right = right_ids[order]
    lo = np.searchsorted(sorted_right, left_ids, side="left")
    hi = np.searchsorted(sorted_right, left_ids, side="right")
    counts = hi - lo
    total = int(counts.sum())
    li = np.repeat(np.arange(len(left)), counts)
    offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    ri = order[np.repeat(lo, counts) + offsets]
    return li, ri


def _parity_transpose(code: LinearCode) -> np.ndarray:
    h = code.parity_check
    if h.shape[0] == 0:
        # full space: every vector is a codeword
        h = np.zeros((1, code.length), dtype=np.int64)
    return np.ascontiguousarray(h.T)


def words_of_weight(
    code: LinearCode, w: int, workers: Optional[WorkerService] = None
) -> List[ClassifiedWord]:
    """All normalised codewords of weight exactly w, in canonical order."""
    n, p = code.length, code.field.p
    if w < 1 or w > n:
        return []
    h_t = _parity_transpose(code)
    a, b = (w + 1) // 2, w // 2

    right_combos = _combinations(n, b)
    right_patterns = _patterns(p, b, leading_one=False)
    right_syn = (-_syndromes(h_t, right_combos, right_patterns, p)) % p
    right_min = right_combos[:, 0] if b else np.full(len(right_combos), n, dtype=np.int64)

    left_combos = _combinations(n, a)
    left_patterns = _patterns(p, a, leading_one=True)
    per_combo = len(left_patterns) * h_t.shape[1]
    step = max(1, BATCH_ENTRIES // max(per_combo, 1))
    chunks = [left_combos[i : i + step] for i in range(0, len(left_combos), step)]

    def search(chunk: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        left_syn = _syndromes(h_t, chunk, left_patterns, p)
        li, ri = _join(left_syn, right_syn)
        lc, lk = np.divmod(li, len(left_patterns))
        rc, rk = np.divmod(ri, len(right_patterns))
        keep = chunk[lc, -1] < right_min[rc]
        supports = np.hstack([chunk[lc[keep]], right_combos[rc[keep]]])
        coefficients = np.hstack([left_patterns[lk[keep]], right_patterns[rk[keep]]])
        return supports, coefficients

    results = workers.map(search, chunks) if workers else [search(c) for c in chunks]
    line_sets = set(code.geometry.point_sets())
    words = [
        _word(support, coefficients, line_sets)
        for supports, coefficients in results
        for support, coefficients in zip(supports, coefficients)
    ]
    return sorted(words, key=ClassifiedWord.sort_key)


def _word(support: np.ndarray, coefficients: np.ndarray, line_sets: Set[FrozenSet[int]]) -> ClassifiedWord:
    support_list = [int(i) for i in support]
    coefficient_list = [int(c) for c in coefficients]
    is_line = set(coefficient_list) == {1} and frozenset(support_list) in line_sets
    return ClassifiedWord(
        weight=len(support_list),
        support=support_list,
        coefficients=coefficient_list,
        is_line_multiple=is_line,
    )


def _guard(code: LinearCode, w_max: int, allow_expensive: bool, max_terms: Optional[int]) -> None:
    if w_max > code.s + 2 and not allow_expensive:
        raise CostGuardExceededException(
            f"w_max={w_max} exceeds s+2={code.s + 2}; pass an explicit override to search further"
        )
    budget = max_terms if max_terms is not None else get_service_dotenv().GPCODE_MAX_SEARCH_TERMS
    terms = sum(search_terms(code.length, w, code.field.p) for w in range(1, w_max + 1))
    if terms > budget:
        raise CostGuardExceededException(
            f"searching weights <= {w_max} needs {terms} terms, budget is {budget}"
        )


def low_weight_codewords(
    code: LinearCode,
    w_max: int,
    allow_expensive: bool = False,
    max_terms: Optional[int] = None,
    workers: Optional[WorkerService] = None,
) -> List[ClassifiedWord]:
    """
    Every nonzero codeword of weight <= w_max up to scalars, ordered by
    (weight, support, coefficients).

    Raises:
        CostGuardExceededException: w_max > s+2 without `allow_expensive`,
            or the search would exceed the term budget
    """
    _guard(code, w_max, allow_expensive, max_terms)
    words: List[ClassifiedWord] = []
    for w in range(1, w_max + 1):
        words.extend(words_of_weight(code, w, workers))
    return words


def min_weight(
    code: LinearCode,
    allow_expensive: bool = False,
    max_terms: Optional[int] = None,
    workers: Optional[WorkerService] = None,
) -> MinWeightResult:
    """
    Smallest weight with a nonzero codeword, searched upwards from 1.

    Raises:
        CodeException: the code is zero
        CostGuardExceededException: the guard trips before a word is found
    """
    if code.rank == 0:
        raise CodeException("the zero code has no minimum weight")
    for w in range(1, code.length + 1):
        _guard(code, w, allow_expensive, max_terms)
        words = words_of_weight(code, w, workers)
        if words:
            return MinWeightResult(weight=w, words=words)
    raise CodeException("no nonzero codeword found")


def brute_force_codewords(code: LinearCode, w_max: int) -> List[ClassifiedWord]:
    """Reference enumeration over every support and every coefficient pattern."""
    h, p = code.parity_check, code.field.p
    line_sets = set(code.geometry.point_sets())
    words = []
    for w in range(1, w_max + 1):
        patterns = _patterns(p, w, leading_one=True)
        for support in itertools.combinations(range(code.length), w):
            columns = h[:, list(support)]
            ok = ~((columns @ patterns.T) % p).any(axis=0)
            for pattern in patterns[ok]:
                words.append(_word(np.asarray(support), pattern, line_sets))
    return sorted(words, key=ClassifiedWord.sort_key)


def _base_p_rows(p: int, length: int, start: int, stop: int) -> np.ndarray:
    codes = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % p


def _row_space_batches(code: LinearCode, limit: int) -> Iterator[np.ndarray]:
    """
    Batches of normalised nonzero codewords: combinations of the reduced
    rows whose first nonzero coefficient is 1, one per word up to scalars.
    """
    k, p = code.rank, code.field.p
    count = (p**k - 1) // (p - 1)
    if count > limit:
        raise CodeException(f"row space has {count} words up to scalars, limit is {limit}")
    for lead in range(k):
        tail = k - lead - 1
        total = p**tail
        for start in range(0, total, 1 << 16):
            tails = _base_p_rows(p, tail, start, min(total, start + (1 << 16)))
            coefficients = np.zeros((len(tails), k), dtype=np.int64)
            coefficients[:, lead] = 1
            coefficients[:, lead + 1 :] = tails
            yield (coefficients @ code.rref) % p


def row_space_codewords(code: LinearCode, limit: int = ROW_SPACE_LIMIT) -> List[ClassifiedWord]:
    """Every nonzero codeword up to scalars, by full enumeration of the row space."""
    line_sets = set(code.geometry.point_sets())
    words = []
    for vectors in _row_space_batches(code, limit):
        for vector in vectors:
            support = np.flatnonzero(vector)
            words.append(_word(support, vector[support], line_sets))
    return sorted(words, key=ClassifiedWord.sort_key)


def row_space_min_weight(code: LinearCode, limit: int = ROW_SPACE_LIMIT) -> int:
    return min(int(np.count_nonzero(v, axis=1).min()) for v in _row_space_batches(code, limit))


def dual_weight_bound(m: int, t: int) -> int:
    """2(t^m - 1)/(t - 1), the lower bound for dual words of a thick 2m-gon."""
    if t == 1:
        return 2 * m
    return 2 * (t**m - 1) // (t - 1)


def dual_min_weight(
    code: LinearCode,
    cap: Optional[int] = None,
    m: Optional[int] = None,
    max_terms: Optional[int] = None,
    workers: Optional[WorkerService] = None,
    exhaustive_limit: int = ROW_SPACE_LIMIT,
) -> DualWeightResult:
    """
    Minimum weight of the dual code.

    Small duals are enumerated completely; otherwise weights 1..cap are
    searched and a miss is reported as `exceeds_cap`.

    Raises:
        CodeException: the dual is too large to enumerate and no cap was given
    """
    dual = code.dual()
    t = len(code.geometry.lines_on_point[0]) - 1
    bound = dual_weight_bound(m, t) if m else None
    p = code.field.p
    if dual.rank == 0:
        return DualWeightResult(method="zero-dual", cap=cap, bound=bound)

    if (p**dual.rank - 1) // (p - 1) <= exhaustive_limit:
        weight = row_space_min_weight(dual, limit=exhaustive_limit)
        return DualWeightResult(weight=weight, method="row-space", cap=cap, bound=bound)

    if cap is None:
        raise CodeException(
            f"dual of dimension {dual.rank} over GF({p}) is too large to enumerate; give a cap"
        )
    for w in range(1, cap + 1):
        _guard(dual, w, True, max_terms)
        if words_of_weight(dual, w, workers):
            return DualWeightResult(weight=w, method="search", cap=cap, bound=bound)
    return DualWeightResult(exceeds_cap=True, method="search", cap=cap, bound=bound)
