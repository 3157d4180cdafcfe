"""
Exceptions module for the geometry domain.
"""

from src.app.core.geometry.exceptions.GeometryException import (
    DisconnectedGeometryException,
    GeometryException,
    PolygonCertificationException,
    UniquenessViolationException,
)

__all__ = [
    "GeometryException",
    "DisconnectedGeometryException",
    "PolygonCertificationException",
    "UniquenessViolationException",
]
