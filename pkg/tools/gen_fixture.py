#!/usr/bin/env python3
"""Author the module_sample fixture and pre-sum its expected totals.

Writes a 61-element scene (60 structural-steel members + 1 pipe line),
the catalog CSVs, filter and work-area definitions, and an
expected_totals.json computed here with plain arithmetic. The engine's
report must later reproduce those totals; keeping the summation in this
standalone script (no package imports) is what makes it an independent
check. Row values are accumulated in element-id order and masses convert
kg -> ton after summing, mirroring the report's stated aggregation
order so the frozen strings are exact at serialization precision.

Usage: python tools/gen_fixture.py
"""

import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "module_sample"

# Catalog rows (project fixture data, metric)
SECTIONS = [
    ("W310×79", 0.0101, 80.661),
    ("W310×118", 0.0151, 119.68),
]
PIPES = [("24", "S-60", 0.6096, 0.02461)]
MATERIALS = [
    ("carbon-steel-pipe", 7.853753057),
    ("structural-steel", 7.85),
]

BEAM = {"name": "W310×79", "area": 0.0101, "lm": 80.661, "len": 6.0, "side": 0.3}
COLUMN = {"name": "W310×118", "area": 0.0151, "lm": 119.68, "len": 6.9, "side": 0.3}
PIPE_OD = 0.609574974  # as-modeled OD, slightly off the 0.6096 nominal
PIPE_T = 0.02461
PIPE_LEN = 14.94404489
PIPE_RHO = 7.853753057

WORK_AREAS = [
    {"name": "zone-a", "priority": 1, "min": [0.0, -1.0, -1.0], "max": [10.0, 20.0, 10.0]},
    {"name": "zone-b", "priority": 2, "min": [0.0, -1.0, -1.0], "max": [40.0, 20.0, 10.0]},
]


def build_elements():
    elements = []

    def add(name, props, lo, hi):
        eid = f"E{len(elements) + 1:03d}"
        elements.append({"id": eid, "name": name, "properties": props, "lo": lo, "hi": hi})

    steel = {"discipline": "structural-steel"}
    # zone-a beams, long axis x
    for z0 in (0.0, 2.0, 4.0):
        for y0 in (0.0, 1.5, 3.0, 4.5, 6.0):
            add(BEAM["name"], steel, (0.5, y0, z0), (0.5 + BEAM["len"], y0 + 0.3, z0 + 0.3))
    # zone-b beams, long axis y
    for z0 in (0.5, 2.5, 4.5):
        for x0 in (11.0, 13.0, 15.0, 17.0, 19.0):
            add(BEAM["name"], steel, (x0, 0.0, z0), (x0 + 0.3, BEAM["len"], z0 + 0.3))
    # zone-a columns
    for y0 in (0.0, 3.0, 6.0):
        for x0 in (1.0, 2.8, 4.6, 6.4, 8.2):
            add(COLUMN["name"], steel, (x0, y0, 0.0), (x0 + 0.3, y0 + 0.3, COLUMN["len"]))
    # zone-b columns
    for y0 in (0.0, 3.0, 6.0):
        for x0 in (18.0, 20.0, 22.0, 24.0, 26.0):
            add(COLUMN["name"], steel, (x0, y0, 0.0), (x0 + 0.3, y0 + 0.3, COLUMN["len"]))
    # the pipe line from the validation case, long axis y
    add(
        "NPS24-S60",
        {"discipline": "piping", "material": "carbon-steel-pipe", "npd": "24", "schedule": "S-60"},
        (12.0, 0.0, 8.0),
        (12.0 + PIPE_OD, PIPE_LEN, 8.0 + PIPE_OD),
    )
    return elements


def row_quantities(element):
    """Volume (m^3) and mass (kg) by the same rules the engine implements."""
    extents = tuple(h - l for l, h in zip(element["lo"], element["hi"]))
    if element["properties"]["discipline"] == "piping":
        rest = sorted(extents)[:2]
        od = (rest[0] + rest[1]) / 2.0
        inner = od - 2.0 * PIPE_T
        area = math.pi / 4.0 * (od * od - inner * inner)
        volume = area * max(extents)
        return volume, volume * PIPE_RHO * 1000.0
    spec = BEAM if element["name"] == BEAM["name"] else COLUMN
    length = max(extents)
    return spec["area"] * length, spec["lm"] * length


def assigned_zone(element):
    centroid = [(l + h) / 2.0 for l, h in zip(element["lo"], element["hi"])]
    for area in sorted(WORK_AREAS, key=lambda a: (a["priority"], a["name"])):
        if all(area["min"][k] <= centroid[k] < area["max"][k] for k in range(3)):
            return area["name"]
    return "unassigned"


def sum_groups(elements):
    rows = {e["id"]: row_quantities(e) for e in elements}
    groups = {}

    def accumulate(key, eid):
        count, vol, mass = groups.get(key, (0, 0.0, 0.0))
        groups[key] = (count + 1, vol + rows[eid][0], mass + rows[eid][1])

    for e in sorted(elements, key=lambda e: e["id"]):
        accumulate("all", e["id"])
        accumulate(f"discipline={e['properties']['discipline']}", e["id"])
        accumulate(f"work_area={assigned_zone(e)}", e["id"])
    return {
        key: {
            "count": count,
            "volume_m3": f"{vol:.4f}",
            "mass_ton": f"{mass / 1000.0:.4f}",
        }
        for key, (count, vol, mass) in sorted(groups.items())
    }, rows


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    elements = build_elements()

    element_lines = []
    for e in elements:
        body = {
            "id": e["id"],
            "name": e["name"],
            "properties": e["properties"],
            "aabb": {"min": list(e["lo"]), "max": list(e["hi"])},
        }
        element_lines.append("    " + json.dumps(body, ensure_ascii=False))
    scene = '{\n  "units": "m",\n  "elements": [\n' + ",\n".join(element_lines) + "\n  ]\n}\n"
    (OUT / "scene.json").write_text(scene, encoding="utf-8")

    (OUT / "sections.csv").write_text(
        "name,area_m2,linear_mass_kg_per_m\n"
        + "".join(f"{n},{a},{lm}\n" for n, a, lm in SECTIONS),
        encoding="utf-8",
    )
    (OUT / "pipes.csv").write_text(
        "npd,schedule,outer_diameter_m,thickness_m\n"
        + "".join(f"{n},{s},{od},{t}\n" for n, s, od, t in PIPES),
        encoding="utf-8",
    )
    (OUT / "materials.csv").write_text(
        "name,density_ton_per_m3\n" + "".join(f"{n},{d}\n" for n, d in MATERIALS),
        encoding="utf-8",
    )

    filters = {
        "structural-steel": {"pred": {"key": "discipline", "op": "equals", "value": "structural-steel"}},
        "piping": {"pred": {"key": "discipline", "op": "equals", "value": "piping"}},
        "w310-members": {"pred": {"key": "name", "op": "prefix", "value": "W310"}},
    }
    (OUT / "filters.json").write_text(
        json.dumps(filters, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    (OUT / "workareas.json").write_text(
        json.dumps(WORK_AREAS, indent=2) + "\n", encoding="utf-8"
    )

    groups, rows = sum_groups(elements)
    expected = {
        "groups": groups,
        "rows": {
            "E001": {"volume_m3": rows["E001"][0], "mass_kg": rows["E001"][1]},
            "E061": {"volume_m3": rows["E061"][0], "mass_kg": rows["E061"][1]},
        },
    }
    (OUT / "expected_totals.json").write_text(
        json.dumps(expected, indent=1) + "\n", encoding="utf-8"
    )

    print(f"wrote {OUT} ({len(elements)} elements)")
    for key, data in groups.items():
        print(f"  {key}: n={data['count']} V={data['volume_m3']} m^3 M={data['mass_ton']} t")


if __name__ == "__main__":
    main()
