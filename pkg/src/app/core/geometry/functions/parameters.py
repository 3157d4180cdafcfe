"""
Arithmetic restrictions on the order of a generalised polygon.
"""

from math import isqrt
from typing import Tuple

from src.app.core.geometry.entities.AxiomReport import OrderAdmissibility
from src.app.core.geometry.exceptions.GeometryException import GeometryException

ADMISSIBLE_GONALITIES = (3, 4, 6, 8, 12)


def _is_square(k: int) -> bool:
    return k >= 0 and isqrt(k) ** 2 == k


def validate_order(n: int, s: int, t: int) -> OrderAdmissibility:
    """
    Check (n, s, t) against the Feit-Higman restrictions and the Higman and
    Haemers-Roos inequalities. Order (1, 1) is the ordinary n-gon and always
    admissible.
    """
    if n < 3 or s < 1 or t < 1:
        raise GeometryException(f"order check needs n >= 3 and s, t >= 1, got ({n}, {s}, {t})")
    reasons = []
    thick = s > 1 and t > 1

    if s == 1 and t == 1:
        return OrderAdmissibility(n=n, s=s, t=t, admissible=True)

    if n not in ADMISSIBLE_GONALITIES:
        reasons.append(f"n={n} is not one of {ADMISSIBLE_GONALITIES}")
    elif n == 3:
        if s != t:
            reasons.append("a projective plane needs s = t")
    elif n == 4:
        if (s * t * (1 + s * t)) % (s + t) != 0:
            reasons.append(f"st(1+st)/(s+t) = {s * t * (1 + s * t)}/{s + t} is not an integer")
        if thick and (s > t * t or t > s * s):
            reasons.append("Higman inequality s <= t^2, t <= s^2 fails")
    elif n == 6:
        if thick and not _is_square(s * t):
            reasons.append(f"st = {s * t} is not a perfect square")
        if thick and (s > t**3 or t > s**3):
            reasons.append("Haemers-Roos inequality s <= t^3, t <= s^3 fails")
    elif n == 8:
        if thick and not _is_square(2 * s * t):
            reasons.append(f"2st = {2 * s * t} is not a perfect square")
        if thick and (s > t * t or t > s * s):
            reasons.append("Higman inequality s <= t^2, t <= s^2 fails")
    elif n == 12:
        if thick:
            reasons.append("a generalised 12-gon needs s = 1 or t = 1")

    return OrderAdmissibility(n=n, s=s, t=t, admissible=not reasons, reasons=reasons)


def expected_counts(n: int, s: int, t: int) -> Tuple[int, int]:
    """
    (number of points, number of lines) forced by the order.

    Raises:
        GeometryException: st = 1 (an ordinary polygon has n of each) or an
            odd n other than 3
    """
    if s * t == 1:
        raise GeometryException(f"order (1, 1): the ordinary {n}-gon has {n} points and {n} lines")
    if n == 3:
        if s != t:
            raise GeometryException("a projective plane needs s = t")
        return s * s + s + 1, s * s + s + 1
    if n % 2:
        raise GeometryException(f"no count formula for odd n = {n}")
    m = n // 2
    base = ((s * t) ** m - 1) // (s * t - 1)
    return (1 + s) * base, (1 + t) * base
