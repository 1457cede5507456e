"""Wavefront OBJ subset reader/writer.

Supported records: ``#`` comments, blank lines, ``v x y z`` vertices,
``f i j k`` triangular faces with 1-based indices, and ``o name`` object
markers (names are preserved by ``parse_objects``, ignored by
``parse_mesh``). Anything else is rejected.
"""

from __future__ import annotations

from .errors import MeshError
from .geometry import TriangleMesh

COORD_FORMAT = "{:.9f}"  # 9 decimal digits: round-trips within 1e-9 absolute


def _parse_records(text: str):
    """Yield (line_no, kind, payload) for every meaningful OBJ line."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "v":
            if len(args) != 3:
                raise MeshError(f"line {line_no}: vertex needs 3 coordinates, got {len(args)}")
            try:
                coords = tuple(float(a) for a in args)
            except ValueError:
                raise MeshError(f"line {line_no}: malformed number in vertex record") from None
            yield line_no, "v", coords
        elif kind == "f":
            if len(args) != 3:
                raise MeshError(
                    f"line {line_no}: non-triangular face with {len(args)} indices"
                )
            try:
                idx = tuple(int(a) for a in args)
            except ValueError:
                raise MeshError(f"line {line_no}: malformed face index") from None
            yield line_no, "f", idx
        elif kind == "o":
            yield line_no, "o", " ".join(args)
        else:
            raise MeshError(f"line {line_no}: unsupported record '{kind}'")


def _check_face(face, n_vertices, line_no):
    for i in face:
        if i < 1 or i > n_vertices:
            raise MeshError(
                f"line {line_no}: face index {i} out of range (1..{n_vertices})"
            )
    return tuple(i - 1 for i in face)


def parse_mesh(text: str) -> TriangleMesh:
    """Parse OBJ content into a single mesh, ignoring object boundaries."""
    vertices: list[tuple[float, float, float]] = []
    faces: list[tuple[int, int, int]] = []
    pending: list[tuple[int, tuple[int, int, int]]] = []
    for line_no, kind, payload in _parse_records(text):
        if kind == "v":
            vertices.append(payload)
        elif kind == "f":
            pending.append((line_no, payload))
    for line_no, face in pending:
        faces.append(_check_face(face, len(vertices), line_no))
    return TriangleMesh(vertices, faces)


def parse_objects(text: str) -> dict[str, TriangleMesh]:
    """Parse OBJ content into one mesh per ``o`` object.

    Face indices are global to the file; each object's mesh is re-indexed
    to the vertices it actually uses. Faces before the first ``o`` record
    land in an object named "".
    """
    vertices: list[tuple[float, float, float]] = []
    by_object: dict[str, list[tuple[int, tuple[int, int, int]]]] = {}
    current = ""
    for line_no, kind, payload in _parse_records(text):
        if kind == "v":
            vertices.append(payload)
        elif kind == "o":
            current = payload
            by_object.setdefault(current, [])
        else:
            by_object.setdefault(current, []).append((line_no, payload))
    meshes: dict[str, TriangleMesh] = {}
    for name, faces in by_object.items():
        local: dict[int, int] = {}
        verts: list[tuple[float, float, float]] = []
        tris: list[tuple[int, int, int]] = []
        for line_no, face in faces:
            face0 = _check_face(face, len(vertices), line_no)
            remapped = []
            for i in face0:
                if i not in local:
                    local[i] = len(verts)
                    verts.append(vertices[i])
                remapped.append(local[i])
            tris.append(tuple(remapped))
        meshes[name] = TriangleMesh(verts, tris)
    return meshes


def serialize_mesh(mesh: TriangleMesh) -> str:
    """Serialize a mesh to OBJ text (vertices first, then faces)."""
    lines = []
    for x, y, z in mesh.vertices:
        lines.append(
            f"v {COORD_FORMAT.format(x)} {COORD_FORMAT.format(y)} {COORD_FORMAT.format(z)}"
        )
    for a, b, c in mesh.triangles:
        lines.append(f"f {a + 1} {b + 1} {c + 1}")
    return "\n".join(lines) + "\n"
