import random

import pytest

from boxtakeoff import (
    Aabb,
    And,
    FilterError,
    Not,
    Or,
    Point3,
    Predicate,
    WorkArea,
    apply_filter,
    assign_work_area,
    eval_filter,
    load_filters,
    save_filters,
)
from boxtakeoff.filters import expr_from_json, expr_to_json
from boxtakeoff.scene import Element, Scene

from filter_oracle import random_expr_json, random_properties


def element(eid="E1", name="W310×79", **props):
    return Element(
        id=eid,
        name=name,
        properties=props,
        aabb=Aabb(Point3(0, 0, 0), Point3(1, 1, 1)),
    )


class TestEvalFilter:
    def test_and_over_discipline_and_name(self):
        expr = And([Predicate("discipline", "equals", "structural"), Predicate("name", "prefix", "W310")])
        assert eval_filter(expr, element(discipline="structural"))
        assert not eval_filter(expr, element(discipline="piping"))

    def test_missing_key_is_false(self):
        assert not eval_filter(Predicate("nope", "equals", ""), element())

    def test_case_insensitive(self):
        assert eval_filter(Predicate("discipline", "equals", "STEEL"), element(discipline="Steel"))

    def test_contains(self):
        assert eval_filter(Predicate("material", "contains", "pipe"), element(material="carbon-steel-PIPE"))

    def test_random_trees_match_brute_force(self):
        rng = random.Random(99)
        for _ in range(200):
            node = random_expr_json(rng, depth=4)
            expr = expr_from_json(node)
            e = element(**random_properties(rng))
            props = dict(e.properties)
            props.setdefault("name", e.name)
            props.setdefault("id", e.id)
            from filter_oracle import brute_eval

            assert eval_filter(expr, e) == brute_eval(node, props)

    def test_unknown_op_rejected(self):
        with pytest.raises(FilterError, match="unknown predicate op"):
            Predicate("k", "regex", "v")

    def test_empty_and_rejected(self):
        with pytest.raises(FilterError):
            And([])


class TestApplyFilter:
    def scene(self):
        return Scene(
            units="m",
            elements=(
                element("A", discipline="structural-steel"),
                element("B", discipline="piping"),
                element("C", discipline="structural-steel"),
            ),
        )

    def test_selects_in_scene_order(self):
        ids = apply_filter(self.scene(), Predicate("discipline", "equals", "structural-steel"))
        assert ids == ["A", "C"]

    def test_tautology_selects_all(self):
        p = Predicate("discipline", "equals", "piping")
        ids = apply_filter(self.scene(), Or([p, Not(p)]))
        assert ids == ["A", "B", "C"]

    def test_contradiction_selects_none(self):
        p = Predicate("discipline", "equals", "piping")
        assert apply_filter(self.scene(), And([p, Not(p)])) == []

    def test_de_morgan(self):
        rng = random.Random(5)
        for _ in range(100):
            a = expr_from_json(random_expr_json(rng, 2))
            b = expr_from_json(random_expr_json(rng, 2))
            e = element(**random_properties(rng))
            lhs = eval_filter(Not(And([a, b])), e)
            rhs = eval_filter(Or([Not(a), Not(b)]), e)
            assert lhs == rhs

    def test_or_is_union_and_is_intersection(self):
        rng = random.Random(6)
        scene = Scene(
            units="m",
            elements=tuple(element(f"E{i}", **random_properties(rng)) for i in range(30)),
        )
        for _ in range(50):
            f = expr_from_json(random_expr_json(rng, 3))
            g = expr_from_json(random_expr_json(rng, 3))
            fs, gs = set(apply_filter(scene, f)), set(apply_filter(scene, g))
            assert set(apply_filter(scene, Or([f, g]))) == fs | gs
            assert set(apply_filter(scene, And([f, g]))) == fs & gs


class TestPersistence:
    def test_roundtrip_two_filters(self):
        catalog = {
            "steel": Predicate("discipline", "equals", "structural-steel"),
            "big": And([Predicate("name", "prefix", "W"), Not(Predicate("zone", "equals", "x"))]),
        }
        assert load_filters(save_filters(catalog)) == catalog

    def test_duplicate_name_rejected(self):
        text = '{"steel": {"pred": {"key": "a", "op": "equals", "value": "b"}}, "steel": {"pred": {"key": "a", "op": "equals", "value": "c"}}}'
        with pytest.raises(FilterError, match="duplicate name 'steel'"):
            load_filters(text)

    def test_random_trees_roundtrip(self):
        rng = random.Random(17)
        for i in range(100):
            expr = expr_from_json(random_expr_json(rng, 5))
            assert expr_from_json(expr_to_json(expr)) == expr
        catalog = {f"f{i}": expr_from_json(random_expr_json(rng, 5)) for i in range(20)}
        assert load_filters(save_filters(catalog)) == catalog

    def test_parse_error_reports_position(self):
        with pytest.raises(FilterError, match=r"line \d+, column \d+"):
            load_filters("{bad json")


class TestWorkAreas:
    def area(self, name, lo, hi, priority):
        return WorkArea(name=name, region=Aabb(Point3(*lo), Point3(*hi)), priority=priority)

    def scene_at(self, *centroids):
        elements = []
        for i, c in enumerate(centroids):
            lo = tuple(v - 0.5 for v in c)
            hi = tuple(v + 0.5 for v in c)
            elements.append(
                Element(id=f"E{i}", name="n", properties={}, aabb=Aabb(Point3(*lo), Point3(*hi)))
            )
        return Scene(units="m", elements=tuple(elements))

    def test_centroid_inside(self):
        scene = self.scene_at((0.5, 0.5, 0.5))
        got = assign_work_area(scene, [self.area("a", (0, 0, 0), (1, 1, 1), 1)])
        assert got == {"E0": "a"}

    def test_max_face_excluded(self):
        scene = self.scene_at((1.0, 0.5, 0.5))  # centroid exactly on the max-x face
        got = assign_work_area(scene, [self.area("a", (0, 0, 0), (1, 1, 1), 1)])
        assert got == {"E0": "unassigned"}

    def test_priority_wins_overlap(self):
        scene = self.scene_at((0.5, 0.5, 0.5))
        areas = [
            self.area("low", (0, 0, 0), (1, 1, 1), 2),
            self.area("high", (0, 0, 0), (1, 1, 1), 1),
        ]
        assert assign_work_area(scene, areas) == {"E0": "high"}

    def test_duplicate_names_rejected(self):
        scene = self.scene_at((0.5, 0.5, 0.5))
        areas = [self.area("a", (0, 0, 0), (1, 1, 1), 1), self.area("a", (0, 0, 0), (2, 2, 2), 2)]
        with pytest.raises(FilterError, match="duplicate work-area name"):
            assign_work_area(scene, areas)

    def test_every_element_labelled_once(self):
        rng = random.Random(31)
        scene = self.scene_at(*[(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(40)])
        areas = []
        for i in range(4):
            lo = [rng.uniform(-5, 0) for _ in range(3)]
            hi = [v + rng.uniform(0.5, 6) for v in lo]
            areas.append(self.area(f"a{i}", lo, hi, rng.randint(1, 3)))
        got = assign_work_area(scene, areas)
        assert set(got) == {e.id for e in scene.elements}
        labels = set(got.values()) - {"unassigned"}
        assert labels <= {a.name for a in areas}
