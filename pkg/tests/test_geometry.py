import math

import numpy as np
import pytest

from boxtakeoff import (
    Aabb,
    MeshError,
    Point3,
    TriangleMesh,
    WatertightnessError,
    bbox_to_mesh,
    compute_aabb,
    is_watertight,
    mesh_volume,
)

from meshutil import make_cylinder_mesh


def box(lo, hi):
    return Aabb(Point3(*lo), Point3(*hi))


class TestPoint3:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            Point3(0.0, float("nan"), 0.0)

    def test_rejects_infinity(self):
        with pytest.raises(ValueError):
            Point3(float("inf"), 0.0, 0.0)


class TestAabb:
    def test_rejects_inverted_corners(self):
        with pytest.raises(ValueError):
            box((1, 0, 0), (0, 1, 1))

    def test_degenerate_box_is_legal(self):
        b = box((2, 3, 4), (2, 3, 4))
        assert b.extents() == (0.0, 0.0, 0.0)

    def test_centroid(self):
        assert box((0, 0, 0), (2, 4, 6)).centroid() == Point3(1, 2, 3)

    def test_halfopen_containment(self):
        b = box((0, 0, 0), (1, 1, 1))
        assert b.contains_halfopen(Point3(0, 0, 0))
        assert not b.contains_halfopen(Point3(1, 0.5, 0.5))


class TestComputeAabb:
    def test_unit_cube(self):
        mesh = bbox_to_mesh(box((0, 0, 0), (1, 1, 1)))
        got = compute_aabb(mesh)
        assert got.min == Point3(0, 0, 0)
        assert got.max == Point3(1, 1, 1)

    def test_single_vertex_degenerate(self):
        mesh = TriangleMesh([(2.0, 3.0, 4.0)], [])
        got = compute_aabb(mesh)
        assert got.min == Point3(2, 3, 4)
        assert got.max == Point3(2, 3, 4)

    def test_cylinder_extents(self):
        mesh = make_cylinder_mesh(0.6096, 14.944, axis="y")
        lx, ly, lz = compute_aabb(mesh).extents()
        assert abs(lx - 0.6096) < 1e-9
        assert abs(ly - 14.944) < 1e-9
        assert abs(lz - 0.6096) < 1e-9

    def test_empty_mesh_rejected(self):
        mesh = TriangleMesh(np.zeros((0, 3)), np.zeros((0, 3), dtype=np.int32))
        with pytest.raises(MeshError):
            compute_aabb(mesh)

    def test_translation_equivariance(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            verts = rng.uniform(-10, 10, size=(30, 3))
            t = rng.uniform(-5, 5, size=3)
            mesh = TriangleMesh(verts, [])
            shifted = TriangleMesh(verts + t, [])
            a, b = compute_aabb(mesh), compute_aabb(shifted)
            assert np.allclose(np.array(b.min.as_tuple()) - np.array(a.min.as_tuple()), t)
            assert np.allclose(np.array(b.max.as_tuple()) - np.array(a.max.as_tuple()), t)


class TestMeshVolume:
    def test_unit_cube(self):
        mesh = bbox_to_mesh(box((0, 0, 0), (1, 1, 1)))
        assert mesh_volume(mesh) == pytest.approx(1.0, abs=1e-12)

    def test_single_tetrahedron(self):
        # not watertight by the edge rule? it is: each of the 6 edges is
        # shared by exactly 2 of the 4 faces
        verts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
        tris = [(0, 2, 1), (0, 1, 3), (0, 3, 2), (1, 2, 3)]
        assert mesh_volume(TriangleMesh(verts, tris)) == pytest.approx(1 / 6, rel=1e-12)

    def test_tessellated_cylinder_matches_ngon_prism(self):
        # oracle: exact volume of a regular n-gon prism with circumradius r
        n, r, h = 256, 0.3048, 14.944
        oracle = n * r * r * math.sin(2 * math.pi / n) / 2.0 * h
        mesh = make_cylinder_mesh(2 * r, h, segments=n)
        assert mesh_volume(mesh) == pytest.approx(oracle, rel=1e-9)
        # the tessellation deficit vs the true cylinder stays tiny
        assert mesh_volume(mesh) == pytest.approx(math.pi * r * r * h, rel=1e-3)

    def test_open_mesh_rejected(self):
        verts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
        tris = [(0, 2, 1), (0, 1, 3), (0, 3, 2)]  # one face missing
        with pytest.raises(WatertightnessError):
            mesh_volume(TriangleMesh(verts, tris))
        assert not is_watertight(TriangleMesh(verts, tris))

    def test_no_triangles_rejected(self):
        with pytest.raises(MeshError):
            mesh_volume(TriangleMesh([(0.0, 0.0, 0.0)], []))

    def test_random_cuboids_match_extent_product(self):
        rng = np.random.default_rng(42)
        for _ in range(100):
            lo = rng.uniform(-50, 50, size=3)
            ext = rng.uniform(1e-3, 20, size=3)
            b = box(tuple(lo), tuple(lo + ext))
            expected = float(ext[0] * ext[1] * ext[2])
            assert mesh_volume(bbox_to_mesh(b)) == pytest.approx(expected, rel=1e-9)

    def test_triangle_permutation_invariance(self):
        mesh = make_cylinder_mesh(1.0, 2.0, segments=32)
        rng = np.random.default_rng(3)
        perm = rng.permutation(mesh.n_triangles)
        shuffled = TriangleMesh(mesh.vertices, mesh.triangles[perm])
        assert mesh_volume(shuffled) == mesh_volume(mesh)


class TestTriangleMeshValidation:
    def test_index_out_of_range(self):
        with pytest.raises(MeshError):
            TriangleMesh([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1, 3)])

    def test_immutable(self):
        mesh = bbox_to_mesh(box((0, 0, 0), (1, 1, 1)))
        with pytest.raises(AttributeError):
            mesh.vertices = None
        with pytest.raises(ValueError):
            mesh.vertices[0, 0] = 9.0
