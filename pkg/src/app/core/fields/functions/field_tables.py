"""
Polynomial arithmetic over GF(p) and the lookup tables behind GF(p^h).

Elements of GF(p^h) are encoded as integers in [0, p^h): the base-p digits of
the integer, least significant first, are the coefficients of the residue
polynomial modulo the field's irreducible polynomial.

Fixed irreducible polynomials (coefficients low -> high, monic):
    GF(4)  : x^2 + x + 1
    GF(8)  : x^3 + x + 1
    GF(16) : x^4 + x + 1
    GF(9)  : x^2 + 1
    GF(27) : x^3 + 2x + 1
    GF(25) : x^2 + 2
    GF(49) : x^2 + 1
Any other (p, h) uses the lexicographically first monic irreducible
polynomial, so the choice is still reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

IRREDUCIBLE: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _trim(poly: List[int]) -> List[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a divided by b over GF(p); b must have a nonzero leading term."""
    r = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    lead_inv = pow(b[-1], -1, p)
    while len(r) >= len(b):
        factor = (r[-1] * lead_inv) % p
        shift = len(r) - len(b)
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return r


def poly_mulmod(
    a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int
) -> List[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    return poly_mod(prod, modulus, p)


def has_root(poly: Sequence[int], p: int) -> bool:
    for x in range(p):
        value = 0
        for c in reversed(poly):
            value = (value * x + c) % p
        if value == 0:
            return True
    return False


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """
    Exhaustive irreducibility check for monic polynomials of degree <= 4.

    Degree 2 and 3 polynomials are irreducible iff they have no root; a
    quartic additionally must not be divisible by a monic irreducible
    quadratic.
    """
    degree = len(poly) - 1
    if degree < 1 or poly[-1] % p == 0:
        return False
    if degree == 1:
        return True
    if degree > 4:
        raise ValueError(f"irreducibility check supports degree <= 4, got {degree}")
    if has_root(poly, p):
        return False
    if degree == 4:
        for c0, c1 in itertools.product(range(p), repeat=2):
            quadratic = (c0, c1, 1)
            if not has_root(quadratic, p) and not poly_mod(poly, quadratic, p):
                return False
    return True


def first_irreducible(p: int, h: int) -> Tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree h over GF(p)."""
    for lower in itertools.product(range(p), repeat=h):
        poly = tuple(reversed(lower)) + (1,)
        if is_irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {h} over GF({p})")


def default_modulus(p: int, h: int) -> Tuple[int, ...]:
    if h == 1:
        return ()
    return IRREDUCIBLE.get((p, h)) or first_irreducible(p, h)


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Lookup tables of GF(p^h); `log`/`exp` are only built when h > 1."""

    q: int
    digits: np.ndarray  # (q, h) coefficient vectors
    weights: np.ndarray  # (h,) powers of p
    neg: np.ndarray
    inv: np.ndarray  # inv[0] = 0 sentinel, never used
    log: Optional[np.ndarray]
    exp: Optional[np.ndarray]


def _encode(coefficients: Sequence[int], p: int, h: int) -> int:
    coefficients = list(coefficients) + [0] * (h - len(coefficients))
    return sum(c * p**i for i, c in enumerate(coefficients))


def _decode(code: int, p: int, h: int) -> List[int]:
    return [(code // p**i) % p for i in range(h)]


def mul_raw(a: int, b: int, p: int, h: int, modulus: Sequence[int]) -> int:
    """Multiply two encoded elements of GF(p^h) without the log table."""
    return _encode(poly_mulmod(_decode(a, p, h), _decode(b, p, h), modulus, p), p, h)


@lru_cache(maxsize=None)
def build_tables(p: int, h: int, modulus: Tuple[int, ...]) -> FieldTables:
    q = p**h
    codes = np.arange(q, dtype=np.int64)
    weights = p ** np.arange(h, dtype=np.int64)
    digits = (codes[:, None] // weights[None, :]) % p
    neg = ((-digits) % p) @ weights

    if h == 1:
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = pow(a, -1, p)
        return FieldTables(q, digits, weights, neg, inv, None, None)

    # primitive element alpha: lexicographically first by code
    order = q - 1
    for alpha in range(2, q):
        exp = np.zeros(2 * order, dtype=np.int64)
        val = 1
        for i in range(order):
            if i > 0 and val == 1:
                break
            exp[i] = val
            val = mul_raw(val, alpha, p, h, modulus)
        else:
            break
    else:
        raise ValueError(f"no primitive element found for GF({p}^{h})")
    # doubled so exp[log a + log b] needs no reduction
    exp[order:] = exp[:order]
    log = np.zeros(q, dtype=np.int64)
    log[exp[:order]] = np.arange(order, dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    inv[1:] = exp[(order - log[1:]) % order]
    return FieldTables(q, digits, weights, neg, inv, log, exp)
