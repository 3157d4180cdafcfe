"""
Geometries shared across the suite.

Constructions and distance tables are session-scoped; tests must treat
them as read-only.
"""

import pytest

from src.app.core.constructions.functions.classical import (
    ordinary_ngon,
    projective_plane,
    symplectic_quadrangle,
)
from src.app.core.constructions.functions.gpg_format import export_gpg
from src.app.core.geometry.functions.distances import distances


@pytest.fixture(scope="session")
def w2():
    """The symplectic quadrangle W(2), order (2, 2)."""
    return symplectic_quadrangle(2)


@pytest.fixture(scope="session")
def w2_oracle(w2):
    return distances(w2)


@pytest.fixture(scope="session")
def fano():
    """PG(2,2)."""
    return projective_plane(2)


@pytest.fixture(scope="session")
def quadrangle():
    """The ordinary quadrangle: points 0..3, lines {0,1} {1,2} {2,3} {0,3}."""
    return ordinary_ngon(4)


@pytest.fixture(scope="session")
def quadrangle_oracle(quadrangle):
    return distances(quadrangle)


@pytest.fixture(scope="session")
def hexagon6():
    """The ordinary hexagon."""
    return ordinary_ngon(6)


@pytest.fixture(scope="session")
def hexagon6_oracle(hexagon6):
    return distances(hexagon6)


@pytest.fixture(scope="session")
def w2_path(tmp_path_factory, w2):
    """W(2) written to a .gpg file."""
    path = tmp_path_factory.mktemp("geometries") / "w2.gpg"
    export_gpg(w2, path)
    return str(path)
