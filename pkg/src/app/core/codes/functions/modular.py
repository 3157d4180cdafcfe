"""
Row reduction and nullspaces over GF(p) with numpy integer arrays.
"""

from typing import List, Optional, Tuple

import numpy as np


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(a % p, dtype=np.int64)


def rref_mod(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form over GF(p). Returns (RREF, pivot columns)."""
    r_mat = mod_p(np.array(a, dtype=np.int64, copy=True), p)
    rows, cols = r_mat.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(r_mat[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            r_mat[[r, pivot]] = r_mat[[pivot, r]]
        r_mat[r] = (r_mat[r] * pow(int(r_mat[r, c]), -1, p)) % p
        factors = r_mat[:, c].copy()
        factors[r] = 0
        r_mat = (r_mat - np.outer(factors, r_mat[r])) % p
        pivots.append(c)
        r += 1
    return r_mat, pivots


def rank_mod(a: np.ndarray, p: int) -> int:
    return len(rref_mod(a, p)[1])


def nullspace_mod(a: np.ndarray, p: int, num_columns: Optional[int] = None) -> np.ndarray:
    """Basis of {x : a x = 0} over GF(p), one basis vector per row."""
    n = a.shape[1] if num_columns is None else num_columns
    if a.size == 0:
        return np.eye(n, dtype=np.int64)
    reduced, pivots = rref_mod(a, p)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    basis[:, pivots] = (-reduced[: len(pivots)][:, free].T) % p
    return basis
