"""Command-line pipeline: ingest, takeoff, export-boxes, validate, filters.

All configuration is explicit (flags or a JSON config file; flags win).
Element-level estimation failures abort the run by default; with
``--skip-errors`` they are collected into a sidecar CSV instead and the
run exits with the partial-success code.

Exit codes: 0 success, 1 failure, 3 partial success (rows skipped).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .catalogs import CatalogSet, load_catalogs
from .errors import EstimationError, TakeoffError
from .estimator import estimate, estimate_volume
from .filters import (
    FilterExpr,
    Or,
    apply_filter,
    assign_work_area,
    load_filters,
    load_work_areas,
)
from .geometry import mesh_volume
from .boxexport import export_boxes
from .reporting import roll_up, write_report
from .scene import Scene, load_scene

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARTIAL = 3


@dataclass
class RunConfig:
    scene: str | None = None
    sections: str | None = None
    pipes: str | None = None
    materials: str | None = None
    filters: str | None = None
    filter_names: list[str] = field(default_factory=list)
    work_areas: str | None = None
    out: str = "."
    skip_errors: bool = False


_CONFIG_KEYS = {
    "scene": "scene",
    "sections": "sections",
    "pipes": "pipes",
    "materials": "materials",
    "filters": "filters",
    "filter": "filter_names",
    "work_areas": "work_areas",
    "out": "out",
    "skip_errors": "skip_errors",
}


def build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if getattr(args, "config", None):
        raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        for key, value in raw.items():
            if key not in _CONFIG_KEYS:
                raise TakeoffError(f"unknown config key '{key}'")
            attr = _CONFIG_KEYS[key]
            if attr == "filter_names":
                value = [value] if isinstance(value, str) else list(value)
            setattr(config, attr, value)
    for attr in ("scene", "sections", "pipes", "materials", "filters", "work_areas", "out"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(config, attr, value)
    if getattr(args, "filter", None):
        config.filter_names = list(args.filter)
    if getattr(args, "skip_errors", False):
        config.skip_errors = True
    return config


def _require(config: RunConfig, *attrs: str) -> None:
    for attr in attrs:
        if getattr(config, attr) in (None, []):
            flag = attr.replace("_", "-").replace("filter-names", "filter")
            raise TakeoffError(f"missing required option --{flag}")


def _load_catalogs(config: RunConfig) -> CatalogSet:
    _require(config, "sections", "pipes", "materials")
    return load_catalogs(
        Path(config.sections).read_text(encoding="utf-8"),
        Path(config.pipes).read_text(encoding="utf-8"),
        Path(config.materials).read_text(encoding="utf-8"),
    )


def _selected_expr(config: RunConfig) -> FilterExpr | None:
    """Combine the selected named filters into one expression (union)."""
    if not config.filter_names:
        return None
    _require(config, "filters")
    catalog = load_filters(Path(config.filters).read_text(encoding="utf-8"))
    exprs = []
    for name in config.filter_names:
        if name not in catalog:
            raise TakeoffError(f"no filter named '{name}' in {config.filters}")
        exprs.append(catalog[name])
    return exprs[0] if len(exprs) == 1 else Or(exprs)


def _selected_elements(scene: Scene, config: RunConfig):
    expr = _selected_expr(config)
    if expr is None:
        return list(scene.elements)
    keep = set(apply_filter(scene, expr))
    return [e for e in scene.elements if e.id in keep]


def _out_dir(config: RunConfig) -> Path:
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_ingest(config: RunConfig) -> int:
    _require(config, "scene")
    scene = load_scene(config.scene)
    print(f"elements: {len(scene.elements)}")
    disciplines: dict[str, int] = {}
    for element in scene.elements:
        d = element.properties.get("discipline", "(none)")
        disciplines[d] = disciplines.get(d, 0) + 1
    print("disciplines: " + ", ".join(f"{d} ({n})" for d, n in sorted(disciplines.items())))
    if scene.elements:
        los = [e.aabb.min.as_tuple() for e in scene.elements]
        his = [e.aabb.max.as_tuple() for e in scene.elements]
        lo = tuple(min(p[i] for p in los) for i in range(3))
        hi = tuple(max(p[i] for p in his) for i in range(3))
        ext = tuple(hi[i] - lo[i] for i in range(3))
        fmt = lambda t: "(" + ", ".join(format(v, ".9g") for v in t) + ")"
        print(f"scene bbox min: {fmt(lo)} max: {fmt(hi)} extents: {fmt(ext)}")
    return EXIT_OK


def cmd_takeoff(config: RunConfig) -> int:
    _require(config, "scene")
    scene = load_scene(config.scene)
    catalogs = _load_catalogs(config)
    selected = _selected_elements(scene, config)

    assignment = None
    if config.work_areas:
        areas = load_work_areas(Path(config.work_areas).read_text(encoding="utf-8"))
        assignment = assign_work_area(scene, areas)

    rows, failures = [], []
    for element in selected:
        try:
            rows.append(estimate(element, catalogs))
        except EstimationError as exc:
            if not config.skip_errors:
                raise
            failures.append((element.id, str(exc)))

    discipline = {e.id: e.properties.get("discipline", "(none)") for e in scene.elements}
    rollups = roll_up(rows, lambda r: "all")
    rollups += roll_up(rows, lambda r: f"discipline={discipline[r.element_id]}")
    if assignment is not None:
        rollups += roll_up(rows, lambda r: f"work_area={assignment[r.element_id]}")

    out = _out_dir(config)
    report_path = out / "report.csv"
    write_report(rollups, rows, report_path)
    print(f"wrote {report_path} ({len(rows)} rows)")

    if failures:
        sidecar = out / "errors.csv"
        lines = ["element_id,error"] + [f"{eid},{msg.replace(',', ';')}" for eid, msg in failures]
        sidecar.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        print(f"skipped {len(failures)} element(s); see {sidecar}", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_export_boxes(config: RunConfig) -> int:
    _require(config, "scene")
    scene = load_scene(config.scene)
    selected = _selected_elements(scene, config)
    out = _out_dir(config)
    path = out / "boxes.obj"
    export_boxes(selected, path)
    print(f"wrote {path} ({len(selected)} boxes)")
    return EXIT_OK


def cmd_validate(config: RunConfig) -> int:
    _require(config, "scene")
    scene = load_scene(config.scene)
    catalogs = _load_catalogs(config)
    selected = _selected_elements(scene, config)

    print("element_id,shape,estimated_m3,mesh_m3,rel_error")
    errors = []
    for element in selected:
        if element.mesh is None:
            continue
        try:
            oracle = mesh_volume(element.mesh)
        except TakeoffError as exc:
            print(f"{element.id},-,-,-,EXCLUDED: {exc}")
            continue
        shape, estimated = estimate_volume(element, catalogs)
        rel = (estimated - oracle) / oracle if oracle != 0 else float("inf")
        print(f"{element.id},{shape.value},{estimated:.6g},{oracle:.6g},{rel:+.6g}")
        errors.append(abs(rel))
    if errors:
        print(f"compared: {len(errors)}  max |rel|: {max(errors):.6g}  mean |rel|: {sum(errors) / len(errors):.6g}")
    else:
        print("compared: 0")
    return EXIT_OK


def cmd_filters_list(config: RunConfig) -> int:
    _require(config, "filters")
    catalog = load_filters(Path(config.filters).read_text(encoding="utf-8"))
    for name in sorted(catalog):
        print(name)
    return EXIT_OK


def cmd_filters_apply(config: RunConfig) -> int:
    _require(config, "scene", "filters", "filter_names")
    scene = load_scene(config.scene)
    for element in _selected_elements(scene, config):
        print(element.id)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, *, catalogs: bool = False) -> None:
    parser.add_argument("--config", help="JSON config file; explicit flags override it")
    parser.add_argument("--scene", help="scene JSON file")
    parser.add_argument("--filters", help="filter definitions JSON file")
    parser.add_argument("--filter", action="append", help="named filter to apply (repeatable; union)")
    parser.add_argument("--out", help="output directory (default: current)")
    if catalogs:
        parser.add_argument("--sections", help="sections CSV")
        parser.add_argument("--pipes", help="pipes CSV")
        parser.add_argument("--materials", help="materials CSV")
        parser.add_argument("--work-areas", dest="work_areas", help="work areas JSON file")
        parser.add_argument(
            "--skip-errors",
            dest="skip_errors",
            action="store_true",
            help="report failing elements in errors.csv instead of aborting",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxtakeoff", description="Bounding-box quantity take-off over scene files"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse a scene and print a summary")
    _add_common(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("takeoff", help="estimate quantities and write report.csv")
    _add_common(p, catalogs=True)
    p.set_defaults(func=cmd_takeoff)

    p = sub.add_parser("export-boxes", help="write bounding boxes to boxes.obj")
    _add_common(p)
    p.set_defaults(func=cmd_export_boxes)

    p = sub.add_parser("validate", help="compare estimates against mesh volumes")
    _add_common(p, catalogs=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("filters", help="inspect and apply saved filters")
    filters_sub = p.add_subparsers(dest="filters_command", required=True)
    pl = filters_sub.add_parser("list", help="list saved filter names")
    _add_common(pl)
    pl.set_defaults(func=cmd_filters_list)
    pa = filters_sub.add_parser("apply", help="print ids matching a named filter")
    _add_common(pa)
    pa.set_defaults(func=cmd_filters_apply)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args)
        return args.func(config)
    except (TakeoffError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
