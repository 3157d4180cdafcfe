from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.functions.geometry_build import geometry_build


def dual_geometry(geometry: Geometry) -> Geometry:
    """Swap points and lines: line j becomes point j, point p becomes line p."""
    label = geometry.label[5:] if geometry.label.startswith("dual ") else f"dual {geometry.label}"
    return geometry_build(geometry.lines_on_point, geometry.num_lines, label=label.strip())
