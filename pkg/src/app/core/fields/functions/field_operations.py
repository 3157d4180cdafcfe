"""
Building fields, evaluating integers in them, and the main theorem's field condition.
"""

from src.app.core.fields.entities.FieldCondition import FieldCondition, PartialSum
from src.app.core.fields.entities.FieldSpec import FieldElem, FieldSpec
from src.app.core.fields.exceptions.FieldException import FieldException
from src.app.core.fields.functions.field_tables import (
    default_modulus,
    is_irreducible,
    is_prime,
)

MAX_DEGREE = 4
MAX_ORDER = 2**16


def field_make(p: int, h: int = 1) -> FieldSpec:
    """
    Build GF(p^h) with its deterministic irreducible modulus.

    Raises:
        FieldException: non-prime p, h outside 1..4, or p^h > 2^16
    """
    if not is_prime(p):
        raise FieldException(f"characteristic {p} is not prime")
    if not 1 <= h <= MAX_DEGREE:
        raise FieldException(f"extension degree {h} is outside 1..{MAX_DEGREE}")
    if p**h > MAX_ORDER:
        raise FieldException(f"GF({p}^{h}) exceeds the supported order {MAX_ORDER}")
    modulus = default_modulus(p, h)
    if h > 1 and not is_irreducible(modulus, p):
        raise FieldException(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p=p, h=h, modulus=modulus)


def eval_integer(k: int, field: FieldSpec) -> FieldElem:
    """k * 1_F; the prime subfield sits at codes 0..p-1 in every encoding."""
    return k % field.p


def alternating_sum(s: int, k: int) -> int:
    """1 - s + s^2 - ... + (-s)^k over the integers."""
    return sum((-s) ** j for j in range(k + 1))


def field_condition(s: int, m: int, field: FieldSpec) -> FieldCondition:
    """
    Evaluate sum_{j=0}^{k} (-s)^j in F for k = 1..m-1.

    The condition holds iff none of these values is 0 in F.
    """
    if s < 1 or m < 2:
        raise FieldException(f"field condition needs s >= 1 and m >= 2, got s={s}, m={m}")
    partial_sums = []
    for k in range(1, m):
        value = alternating_sum(s, k)
        partial_sums.append(
            PartialSum(k=k, integer_value=value, field_value=eval_integer(value, field))
        )
    failing = [ps.k for ps in partial_sums if ps.field_value == 0]
    return FieldCondition(holds=not failing, failing_k=failing, partial_sums=partial_sums)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) for a prime power q."""
    if q < 2:
        raise FieldException(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    h, rest = 0, q
    while rest % p == 0:
        rest //= p
        h += 1
    if rest != 1:
        raise FieldException(f"{q} is not a prime power")
    return field_make(p, h)
