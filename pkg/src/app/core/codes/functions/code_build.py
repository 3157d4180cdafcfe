"""
The incidence code of a geometry and basic vector operations on it.
"""

import numpy as np

from src.app.core.codes.entities.LinearCode import LinearCode
from src.app.core.codes.entities.PointVector import PointVector
from src.app.core.codes.exceptions.CodeException import CodeException
from src.app.core.fields.entities.FieldSpec import FieldSpec
from src.app.core.geometry.entities.Geometry import Geometry


def code_build(geometry: Geometry, field: FieldSpec) -> LinearCode:
    """Code spanned by the line indicator vectors, rows in line order."""
    if not field.is_prime_field:
        raise CodeException(f"incidence codes are built over prime fields only, got {field}")
    return LinearCode.from_generators(geometry, field, geometry.incidence_matrix())


def line_vector(code: LinearCode, line: int) -> PointVector:
    return PointVector.indicator(code.field, code.length, code.geometry.lines[line])


def _check_compatible(code_field: FieldSpec, length: int, v: PointVector) -> None:
    if v.field != code_field:
        raise CodeException(f"vector over {v.field} used with a code over {code_field}")
    if len(v) != length:
        raise CodeException(f"vector of length {len(v)} used with a code of length {length}")


def membership(code: LinearCode, v: PointVector) -> bool:
    _check_compatible(code.field, code.length, v)
    return not np.any((code.parity_check @ v.values) % code.field.p)


def inner_product(f: PointVector, g: PointVector) -> int:
    """<f, g> = sum over points of f(x) g(x)."""
    _check_compatible(f.field, len(f), g)
    return int((f.values @ g.values) % f.field.p)


def covered(geometry: Geometry, line: int, f: PointVector) -> bool:
    """True iff f is nonzero on every point of the line."""
    if len(f) != geometry.num_points:
        raise CodeException(f"vector of length {len(f)} on a geometry with {geometry.num_points} points")
    return bool(np.all(f.values[list(geometry.lines[line])] != 0))
