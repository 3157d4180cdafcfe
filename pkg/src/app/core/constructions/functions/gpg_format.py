"""
The gpg v1 text format for incidence structures.

    gpg 1
    points <P>
    lines <L>
    # label: <free text>
    0: <p> <p> ...
    1: ...

One record per line in index order, points ascending, 0-based ASCII decimal
indices, '#' starts a comment. The optional `# label:` comment carries the
geometry label, so a geometry whose lines are stored ascending round-trips
exactly.
"""

from pathlib import Path
from typing import List, Tuple, Union

from src.app.core.constructions.exceptions.ConstructionException import GpgFormatException
from src.app.core.geometry.entities.Geometry import Geometry
from src.app.core.geometry.exceptions.GeometryException import GeometryException
from src.app.core.geometry.functions.geometry_build import geometry_build

LABEL_PREFIX = "# label:"
PathLike = Union[str, Path]


def format_gpg(geometry: Geometry) -> str:
    """
    Canonical gpg text of `geometry`.

    Points inside each record are written in ascending order whatever the
    order stored on the line, so a geometry built with unsorted lines comes
    back from `parse_gpg` with its lines sorted. Canonical text round-trips
    byte for byte.
    """
    out = [
        "gpg 1",
        f"points {geometry.num_points}",
        f"lines {geometry.num_lines}",
    ]
    if geometry.label:
        out.append(f"{LABEL_PREFIX} {geometry.label}")
    for j, line in enumerate(geometry.lines):
        out.append(f"{j}: " + " ".join(str(p) for p in sorted(line)))
    return "\n".join(out) + "\n"


def _is_index(token: str) -> bool:
    # ASCII digits only; str.isdigit also accepts superscripts and other scripts
    return token.isascii() and token.isdigit()


def _header_value(text: str, keyword: str, line_number: int) -> int:
    parts = text.split()
    if len(parts) != 2 or parts[0] != keyword or not _is_index(parts[1]):
        raise GpgFormatException(f"expected '{keyword} <count>', got {text!r}", line_number)
    return int(parts[1])


def parse_gpg(text: str) -> Geometry:
    """
    Parse gpg text into a Geometry.

    Raises:
        GpgFormatException: malformed header or record, wrong record count,
            index out of range, repeated incidence
    """
    label = ""
    body: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.split("\n"), start=1):
        if raw.startswith(LABEL_PREFIX) and not label:
            label = raw[len(LABEL_PREFIX):].strip()
        content = raw.split("#", 1)[0].strip()
        if content:
            body.append((number, content))

    if len(body) < 3:
        raise GpgFormatException("missing header; expected 'gpg 1', 'points', 'lines'")
    number, version = body[0]
    if version != "gpg 1":
        raise GpgFormatException(f"unsupported header {version!r}", number)
    num_points = _header_value(body[1][1], "points", body[1][0])
    num_lines = _header_value(body[2][1], "lines", body[2][0])

    records = body[3:]
    if len(records) != num_lines:
        raise GpgFormatException(f"header announces {num_lines} lines, found {len(records)} records")

    lines: List[List[int]] = []
    for expected, (number, content) in enumerate(records):
        index, sep, rest = content.partition(":")
        if not sep or index.strip() != str(expected):
            raise GpgFormatException(f"expected record '{expected}: ...', got {content!r}", number)
        tokens = rest.split()
        bad = [token for token in tokens if not _is_index(token)]
        if bad:
            raise GpgFormatException(f"non-integer point index {bad[0]!r} in {content!r}", number)
        points = [int(token) for token in tokens]
        out_of_range = [p for p in points if not 0 <= p < num_points]
        if out_of_range:
            raise GpgFormatException(
                f"point index {out_of_range[0]} outside 0..{num_points - 1}", number
            )
        if len(set(points)) != len(points):
            raise GpgFormatException(f"duplicate incidence on line {expected}", number)
        lines.append(points)

    try:
        return geometry_build(lines, num_points, label=label)
    except GeometryException as e:
        raise GpgFormatException(str(e))


def export_gpg(geometry: Geometry, destination: PathLike) -> None:
    Path(destination).write_text(format_gpg(geometry), encoding="utf-8", newline="\n")


def import_gpg(source: PathLike) -> Geometry:
    path = Path(source)
    if not path.is_file():
        raise GpgFormatException(f"no such file: {path}")
    return parse_gpg(path.read_text(encoding="utf-8"))
