"""Core geometry: points, axis-aligned boxes, triangle meshes.

All coordinates are meters. Types are immutable after construction and
safe to share across threads. The mesh kernels (extrema reduction,
signed-tetrahedron volume, edge-manifold scan) run on a compiled
extension when available; set ``BOXTAKEOFF_PURE=1`` to force the numpy
fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import MeshError, WatertightnessError

if os.environ.get("BOXTAKEOFF_PURE"):
    from . import _meshkernels_np as _kernels

    KERNEL_BACKEND = "numpy"
else:
    try:
        from . import _meshkernels as _kernels  # type: ignore[no-redef]

        KERNEL_BACKEND = "compiled"
    except ImportError:
        from . import _meshkernels_np as _kernels  # type: ignore[no-redef]

        KERNEL_BACKEND = "numpy"


@dataclass(frozen=True)
class Point3:
    """A 3D point; every coordinate must be finite."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError(f"non-finite coordinate in point ({self.x}, {self.y}, {self.z})")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Aabb:
    """Axis-aligned bounding box given by its minimum and maximum corners.

    Degenerate boxes (zero extent on one or more axes) are legal and have
    zero volume.
    """

    min: Point3
    max: Point3

    def __post_init__(self):
        if self.min.x > self.max.x or self.min.y > self.max.y or self.min.z > self.max.z:
            raise ValueError(
                f"invalid box: min corner {self.min.as_tuple()} exceeds max corner {self.max.as_tuple()}"
            )

    def extents(self) -> tuple[float, float, float]:
        """Edge lengths (Lx, Ly, Lz)."""
        return (self.max.x - self.min.x, self.max.y - self.min.y, self.max.z - self.min.z)

    def centroid(self) -> Point3:
        return Point3(
            (self.min.x + self.max.x) / 2.0,
            (self.min.y + self.max.y) / 2.0,
            (self.min.z + self.max.z) / 2.0,
        )

    def contains_halfopen(self, p: Point3) -> bool:
        """Half-open containment test: min inclusive, max exclusive per axis."""
        return (
            self.min.x <= p.x < self.max.x
            and self.min.y <= p.y < self.max.y
            and self.min.z <= p.z < self.max.z
        )


class TriangleMesh:
    """Indexed triangle mesh.

    ``vertices`` is an (n, 3) float64 array, ``triangles`` an (m, 3) int32
    array of 0-based vertex indices. Both arrays are frozen (read-only)
    after construction.
    """

    __slots__ = ("vertices", "triangles")

    def __init__(self, vertices, triangles):
        verts = np.ascontiguousarray(vertices, dtype=np.float64)
        tris = np.ascontiguousarray(triangles, dtype=np.int32)
        if verts.ndim != 2 or verts.shape[1] != 3:
            raise MeshError("vertices must be an (n, 3) array")
        if tris.size == 0:
            tris = tris.reshape(0, 3)
        if tris.ndim != 2 or tris.shape[1] != 3:
            raise MeshError("triangles must be an (m, 3) array of vertex indices")
        if not np.all(np.isfinite(verts)):
            raise MeshError("non-finite vertex coordinate")
        if tris.shape[0] and (tris.min() < 0 or tris.max() >= verts.shape[0]):
            raise MeshError(
                f"triangle index out of range (mesh has {verts.shape[0]} vertices)"
            )
        verts.flags.writeable = False
        tris.flags.writeable = False
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "triangles", tris)

    def __setattr__(self, name, value):
        raise AttributeError("TriangleMesh is immutable")

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def n_triangles(self) -> int:
        return self.triangles.shape[0]


def compute_aabb(mesh: TriangleMesh) -> Aabb:
    """Bounding box of a mesh: componentwise extrema over all vertices."""
    if mesh.n_vertices == 0:
        raise MeshError("cannot compute bounding box of an empty mesh")
    lo, hi = _kernels.aabb_minmax(mesh.vertices)
    return Aabb(
        Point3(float(lo[0]), float(lo[1]), float(lo[2])),
        Point3(float(hi[0]), float(hi[1]), float(hi[2])),
    )


def is_watertight(mesh: TriangleMesh) -> bool:
    """True when every undirected edge is shared by exactly two triangles."""
    if mesh.n_triangles == 0:
        return False
    return _kernels.first_nonmanifold_edge(mesh.triangles, mesh.n_vertices) is None


def signed_mesh_volume(mesh: TriangleMesh) -> float:
    """Signed divergence-theorem volume; positive for outward-oriented meshes.

    Does not check watertightness; prefer ``mesh_volume`` for validated input.
    """
    return _kernels.signed_volume_sum(mesh.vertices, mesh.triangles)


def mesh_volume(mesh: TriangleMesh) -> float:
    """Enclosed volume of a watertight, consistently oriented mesh.

    Sums the signed tetrahedron contributions (v0 . (v1 x v2)) / 6 over all
    triangles and returns the absolute value. Raises ``WatertightnessError``
    when any undirected edge is not shared by exactly two triangles;
    orientation consistency is assumed, not verified.
    """
    if mesh.n_triangles == 0:
        raise MeshError("mesh has no triangles; volume is undefined")
    bad = _kernels.first_nonmanifold_edge(mesh.triangles, mesh.n_vertices)
    if bad is not None:
        u, v, count = bad
        raise WatertightnessError(
            f"open mesh: edge ({u}, {v}) used by {count} triangle(s), expected 2"
        )
    return abs(_kernels.signed_volume_sum(mesh.vertices, mesh.triangles))
