"""Boolean property filters and 3D work-area assignment.

A filter is an and/or/not tree over string predicates tested against an
element's property map. Trees persist as JSON mirroring the node
structure, so saved filters stay reviewable. Work areas partition space
into half-open boxes; an element belongs to the highest-ranked (lowest
priority number) area containing its AABB centroid.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import FilterError
from .geometry import Aabb, Point3
from .scene import Element, Scene

PREDICATE_OPS = ("equals", "contains", "prefix")


@dataclass(frozen=True)
class Predicate:
    """Case-insensitive string test against one element property."""

    key: str
    op: str
    value: str

    def __post_init__(self):
        if not self.key:
            raise FilterError("predicate key must be non-empty")
        if self.op not in PREDICATE_OPS:
            raise FilterError(f"unknown predicate op '{self.op}' (use one of {', '.join(PREDICATE_OPS)})")


@dataclass(frozen=True)
class And:
    children: tuple

    def __init__(self, children):
        children = tuple(children)
        if not children:
            raise FilterError("'and' needs at least one child")
        object.__setattr__(self, "children", children)


@dataclass(frozen=True)
class Or:
    children: tuple

    def __init__(self, children):
        children = tuple(children)
        if not children:
            raise FilterError("'or' needs at least one child")
        object.__setattr__(self, "children", children)


@dataclass(frozen=True)
class Not:
    child: object


FilterExpr = Predicate | And | Or | Not
FilterCatalog = dict[str, FilterExpr]


def _element_value(element: Element, key: str) -> str | None:
    # "name" and "id" resolve to the element fields when the property
    # map does not override them, so filters can target both.
    value = element.properties.get(key)
    if value is not None:
        return value
    if key == "name":
        return element.name
    if key == "id":
        return element.id
    return None


def eval_filter(expr: FilterExpr, element: Element) -> bool:
    """Evaluate a filter tree against one element; missing keys test false."""
    if isinstance(expr, Predicate):
        value = _element_value(element, expr.key)
        if value is None:
            return False
        have, want = value.casefold(), expr.value.casefold()
        if expr.op == "equals":
            return have == want
        if expr.op == "contains":
            return want in have
        return have.startswith(want)
    if isinstance(expr, And):
        return all(eval_filter(child, element) for child in expr.children)
    if isinstance(expr, Or):
        return any(eval_filter(child, element) for child in expr.children)
    if isinstance(expr, Not):
        return not eval_filter(expr.child, element)
    raise FilterError(f"not a filter node: {expr!r}")


def apply_filter(scene: Scene, expr: FilterExpr) -> list[str]:
    """Ids of exactly the matching elements, in scene order."""
    return [e.id for e in scene.elements if eval_filter(expr, e)]


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def expr_to_json(expr: FilterExpr):
    if isinstance(expr, Predicate):
        return {"pred": {"key": expr.key, "op": expr.op, "value": expr.value}}
    if isinstance(expr, And):
        return {"and": [expr_to_json(c) for c in expr.children]}
    if isinstance(expr, Or):
        return {"or": [expr_to_json(c) for c in expr.children]}
    if isinstance(expr, Not):
        return {"not": expr_to_json(expr.child)}
    raise FilterError(f"not a filter node: {expr!r}")


def expr_from_json(raw) -> FilterExpr:
    if not isinstance(raw, dict) or len(raw) != 1:
        raise FilterError(f"filter node must be a single-key object, got {raw!r}")
    kind, payload = next(iter(raw.items()))
    if kind == "pred":
        if not isinstance(payload, dict) or set(payload) != {"key", "op", "value"}:
            raise FilterError(f"predicate needs exactly key/op/value, got {payload!r}")
        return Predicate(payload["key"], payload["op"], payload["value"])
    if kind == "and":
        return And([expr_from_json(c) for c in payload])
    if kind == "or":
        return Or([expr_from_json(c) for c in payload])
    if kind == "not":
        return Not(expr_from_json(payload))
    raise FilterError(f"unknown filter node kind '{kind}'")


def _reject_duplicates(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise FilterError(f"duplicate name '{key}'")
        seen[key] = value
    return seen


def save_filters(catalog: FilterCatalog) -> str:
    doc = {name: expr_to_json(expr) for name, expr in catalog.items()}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_filters(text: str) -> FilterCatalog:
    """Parse a filters file; ``load_filters(save_filters(c)) == c``."""
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise FilterError(f"filter syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise FilterError("filters file must be a JSON object of name -> expression")
    return {name: expr_from_json(raw) for name, raw in doc.items()}


# ---------------------------------------------------------------------------
# Work areas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WorkArea:
    """A named half-open spatial region; lower priority number wins overlaps."""

    name: str
    region: Aabb
    priority: int


def load_work_areas(text: str) -> list[WorkArea]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FilterError(f"work-area syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, list):
        raise FilterError("work-areas file must be a JSON list")
    areas = []
    for raw in doc:
        try:
            region = Aabb(Point3(*map(float, raw["min"])), Point3(*map(float, raw["max"])))
            areas.append(WorkArea(name=str(raw["name"]), region=region, priority=int(raw["priority"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise FilterError(f"bad work-area entry {raw!r}: {exc}") from None
    _check_unique_names(areas)
    return areas


def save_work_areas(areas: list[WorkArea]) -> str:
    doc = [
        {
            "name": a.name,
            "priority": a.priority,
            "min": list(a.region.min.as_tuple()),
            "max": list(a.region.max.as_tuple()),
        }
        for a in areas
    ]
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _check_unique_names(areas) -> None:
    seen = set()
    for area in areas:
        if area.name in seen:
            raise FilterError(f"duplicate work-area name '{area.name}'")
        seen.add(area.name)


UNASSIGNED = "unassigned"


def assign_work_area(scene: Scene, areas: list[WorkArea]) -> dict[str, str]:
    """Map each element id to exactly one area name (or "unassigned").

    Containment tests the AABB centroid against the half-open region (min
    inclusive, max exclusive per axis). Candidate areas are ranked by
    (priority, name), so equal priorities still resolve deterministically.
    """
    _check_unique_names(areas)
    ranked = sorted(areas, key=lambda a: (a.priority, a.name))
    assignment: dict[str, str] = {}
    for element in scene.elements:
        if element.aabb is None:
            raise FilterError(f"element '{element.id}' has no AABB; resolve meshes first")
        centroid = element.aabb.centroid()
        label = UNASSIGNED
        for area in ranked:
            if area.region.contains_halfopen(centroid):
                label = area.name
                break
        assignment[element.id] = label
    return assignment
