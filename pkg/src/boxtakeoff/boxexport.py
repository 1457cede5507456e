"""Bounding-box mesh generation and OBJ export for visual inspection."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import MeshError
from .geometry import Aabb, TriangleMesh
from .objio import COORD_FORMAT
from .scene import Element

# Corner c in 0..7 selects max (bit set) or min per axis: x = bit 0,
# y = bit 1, z = bit 2 -- z-major binary corner order.
_CORNER_BITS = [(c & 1, (c >> 1) & 1, (c >> 2) & 1) for c in range(8)]

# Outward-oriented triangulation of the 6 faces over those corners.
BOX_TRIANGLES = (
    (0, 2, 1), (1, 2, 3),  # z = min
    (4, 5, 6), (5, 7, 6),  # z = max
    (0, 1, 5), (0, 5, 4),  # y = min
    (2, 6, 7), (2, 7, 3),  # y = max
    (0, 4, 6), (0, 6, 2),  # x = min
    (1, 3, 7), (1, 7, 5),  # x = max
)


def box_corners(aabb: Aabb) -> list[tuple[float, float, float]]:
    lo, hi = aabb.min, aabb.max
    return [
        ((hi.x if bx else lo.x), (hi.y if by else lo.y), (hi.z if bz else lo.z))
        for bx, by, bz in _CORNER_BITS
    ]


def bbox_to_mesh(aabb: Aabb) -> TriangleMesh:
    """Watertight 12-triangle mesh of a box, outward-oriented.

    Degenerate boxes yield combinatorially valid meshes of zero volume.
    """
    return TriangleMesh(box_corners(aabb), BOX_TRIANGLES)


def export_boxes(elements: Iterable[Element], destination: str | Path | None = None) -> str:
    """OBJ file with one named object per element's bounding box.

    Vertex indices are global to the file, per OBJ convention. Object
    order follows the input order.
    """
    lines = ["# axis-aligned element boxes"]
    offset = 0
    for element in elements:
        if element.aabb is None:
            raise MeshError(f"element '{element.id}' has no AABB to export")
        lines.append(f"o {element.id}")
        for x, y, z in box_corners(element.aabb):
            lines.append(
                f"v {COORD_FORMAT.format(x)} {COORD_FORMAT.format(y)} {COORD_FORMAT.format(z)}"
            )
        for a, b, c in BOX_TRIANGLES:
            lines.append(f"f {offset + a + 1} {offset + b + 1} {offset + c + 1}")
        offset += 8
    content = "\n".join(lines) + "\n"
    if destination is not None:
        Path(destination).write_text(content, encoding="utf-8", newline="\n")
    return content
