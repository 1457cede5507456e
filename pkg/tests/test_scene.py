import json

import pytest

from boxtakeoff import (
    Aabb,
    Point3,
    SceneError,
    bbox_to_mesh,
    load_scene,
    parse_scene,
    serialize_mesh,
)


def scene_doc(elements):
    return json.dumps({"units": "m", "elements": elements})


ONE_BOX = {
    "id": "E1",
    "name": "thing",
    "properties": {"discipline": "misc"},
    "aabb": {"min": [0, 0, 0], "max": [1, 1, 1]},
}


def test_single_element_roundtrip():
    scene = parse_scene(scene_doc([ONE_BOX]))
    assert len(scene.elements) == 1
    e = scene.elements[0]
    assert e.id == "E1"
    assert e.aabb == Aabb(Point3(0, 0, 0), Point3(1, 1, 1))
    assert e.properties["discipline"] == "misc"


def test_duplicate_id_rejected():
    doc = scene_doc([ONE_BOX, ONE_BOX])
    with pytest.raises(SceneError, match="duplicate element id 'E1'"):
        parse_scene(doc)


def test_module_sample_parses_61_elements(sample_paths):
    text = sample_paths["scene"].read_text(encoding="utf-8")
    scene = parse_scene(text)
    assert len(scene.elements) == 61
    # fixture is written one element per line, so the file itself is countable
    assert sum(1 for line in text.splitlines() if '"id"' in line) == 61


def test_unknown_unit_rejected():
    with pytest.raises(SceneError, match="unknown unit 'ft'"):
        parse_scene(json.dumps({"units": "ft", "elements": []}))


def test_missing_units_rejected():
    with pytest.raises(SceneError, match="units"):
        parse_scene(json.dumps({"elements": []}))


def test_missing_required_field():
    with pytest.raises(SceneError, match="missing required field 'name'"):
        parse_scene(scene_doc([{"id": "E1", "aabb": {"min": [0, 0, 0], "max": [1, 1, 1]}}]))


def test_exactly_one_geometry_source():
    bad = dict(ONE_BOX)
    bad["mesh"] = "x.obj"
    with pytest.raises(SceneError, match="exactly one"):
        parse_scene(scene_doc([bad]))
    with pytest.raises(SceneError, match="exactly one"):
        parse_scene(scene_doc([{"id": "E1", "name": "n"}]))


def test_syntax_error_reports_position():
    with pytest.raises(SceneError, match=r"line \d+, column \d+"):
        parse_scene('{"units": "m", "elements": [}')


def test_inverted_aabb_rejected():
    bad = {"id": "E1", "name": "n", "aabb": {"min": [1, 0, 0], "max": [0, 1, 1]}}
    with pytest.raises(SceneError, match="E1"):
        parse_scene(scene_doc([bad]))


def test_load_scene_resolves_meshes(tmp_path):
    mesh = bbox_to_mesh(Aabb(Point3(1, 2, 3), Point3(4, 6, 8)))
    (tmp_path / "cube.obj").write_text(serialize_mesh(mesh), encoding="utf-8")
    doc = {
        "units": "m",
        "elements": [{"id": "M1", "name": "meshy", "properties": {}, "mesh": "cube.obj"}],
    }
    (tmp_path / "scene.json").write_text(json.dumps(doc), encoding="utf-8")
    scene = load_scene(tmp_path / "scene.json")
    e = scene.elements[0]
    assert e.mesh is not None
    assert e.aabb == Aabb(Point3(1, 2, 3), Point3(4, 6, 8))


def test_load_scene_missing_mesh_file(tmp_path):
    doc = {"units": "m", "elements": [{"id": "M1", "name": "n", "mesh": "absent.obj"}]}
    (tmp_path / "scene.json").write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(SceneError, match="absent.obj"):
        load_scene(tmp_path / "scene.json")


def test_elements_are_immutable():
    scene = parse_scene(scene_doc([ONE_BOX]))
    e = scene.elements[0]
    with pytest.raises(AttributeError):
        e.name = "other"
    with pytest.raises(TypeError):
        e.properties["discipline"] = "hacked"
