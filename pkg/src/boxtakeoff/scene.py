"""Scene file parsing and mesh resolution.

A scene is a JSON document: ``{"units": "m", "elements": [...]}``. Each
element carries an id, a name, a string property map, and exactly one of
an explicit ``aabb`` or a ``mesh`` path (relative to the scene file).
Units are meters only; anything else is rejected rather than converted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .errors import SceneError
from .geometry import Aabb, Point3, TriangleMesh, compute_aabb
from .objio import parse_mesh


@dataclass(frozen=True)
class Element:
    """One model item. ``aabb`` is None only while a mesh is unresolved."""

    id: str
    name: str
    properties: Mapping[str, str] = field(default_factory=dict)
    aabb: Aabb | None = None
    mesh_path: str | None = None
    mesh: TriangleMesh | None = None
    work_area: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "properties", MappingProxyType(dict(self.properties)))


@dataclass(frozen=True)
class Scene:
    units: str
    elements: tuple[Element, ...]

    def by_id(self, element_id: str) -> Element:
        for e in self.elements:
            if e.id == element_id:
                return e
        raise KeyError(element_id)


def _corner(raw, what: str, idx: int) -> Point3:
    if not isinstance(raw, list) or len(raw) != 3:
        raise SceneError(f"element #{idx}: '{what}' must be a list of 3 numbers")
    try:
        return Point3(float(raw[0]), float(raw[1]), float(raw[2]))
    except (TypeError, ValueError) as exc:
        raise SceneError(f"element #{idx}: bad '{what}' corner: {exc}") from None


def _parse_element(raw, idx: int) -> Element:
    if not isinstance(raw, dict):
        raise SceneError(f"element #{idx}: expected an object")
    for required in ("id", "name"):
        if required not in raw:
            raise SceneError(f"element #{idx}: missing required field '{required}'")
    elem_id = raw["id"]
    if not isinstance(elem_id, str) or not elem_id:
        raise SceneError(f"element #{idx}: 'id' must be a non-empty string")
    name = raw["name"]
    if not isinstance(name, str):
        raise SceneError(f"element '{elem_id}': 'name' must be a string")
    props = raw.get("properties", {})
    if not isinstance(props, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in props.items()
    ):
        raise SceneError(f"element '{elem_id}': 'properties' must map strings to strings")

    has_aabb = "aabb" in raw
    has_mesh = "mesh" in raw
    if has_aabb == has_mesh:
        raise SceneError(f"element '{elem_id}': exactly one of 'aabb' or 'mesh' is required")
    if has_aabb:
        box = raw["aabb"]
        if not isinstance(box, dict) or "min" not in box or "max" not in box:
            raise SceneError(f"element '{elem_id}': 'aabb' needs 'min' and 'max' corners")
        try:
            aabb = Aabb(_corner(box["min"], "min", idx), _corner(box["max"], "max", idx))
        except ValueError as exc:
            raise SceneError(f"element '{elem_id}': {exc}") from None
        return Element(id=elem_id, name=name, properties=props, aabb=aabb)
    mesh_path = raw["mesh"]
    if not isinstance(mesh_path, str) or not mesh_path:
        raise SceneError(f"element '{elem_id}': 'mesh' must be a relative path")
    return Element(id=elem_id, name=name, properties=props, mesh_path=mesh_path)


def parse_scene(text: str) -> Scene:
    """Parse scene JSON. Mesh references are kept unresolved (see ``load_scene``)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"scene syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SceneError("scene must be a JSON object")
    if "units" not in doc:
        raise SceneError("missing required field 'units'")
    if doc["units"] != "m":
        raise SceneError(f"unknown unit '{doc['units']}': this engine accepts meters ('m') only")
    raw_elements = doc.get("elements")
    if not isinstance(raw_elements, list):
        raise SceneError("missing or invalid 'elements' list")

    elements = []
    seen: set[str] = set()
    for idx, raw in enumerate(raw_elements):
        element = _parse_element(raw, idx)
        if element.id in seen:
            raise SceneError(f"duplicate element id '{element.id}'")
        seen.add(element.id)
        elements.append(element)
    return Scene(units="m", elements=tuple(elements))


def resolve_meshes(scene: Scene, base_dir: str | Path) -> Scene:
    """Load every referenced mesh and attach it plus its computed AABB."""
    base = Path(base_dir)
    resolved = []
    for element in scene.elements:
        if element.mesh_path is None:
            resolved.append(element)
            continue
        mesh_file = base / element.mesh_path
        try:
            mesh = parse_mesh(mesh_file.read_text(encoding="utf-8"))
        except OSError as exc:
            raise SceneError(f"element '{element.id}': cannot read mesh '{element.mesh_path}': {exc}") from None
        resolved.append(replace(element, mesh=mesh, aabb=compute_aabb(mesh)))
    return Scene(units=scene.units, elements=tuple(resolved))


def load_scene(path: str | Path) -> Scene:
    """Read a scene file and eagerly resolve all mesh references."""
    path = Path(path)
    scene = parse_scene(path.read_text(encoding="utf-8"))
    return resolve_meshes(scene, path.parent)
