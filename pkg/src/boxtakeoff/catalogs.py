"""Reference tables: steel sections, pipe schedules, material densities.

Catalogs ship as editable CSVs (UTF-8, comma-separated, '.' decimal
point). Values are project fixtures, not authoritative standard data.
Lookups normalize names: trimmed, case-folded, with the multiplication
sign unified to a plain 'x' (BIM exports are inconsistent about it).
"ton" is the metric ton, 1000 kg, throughout.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .errors import CatalogError

SECTION_HEADER = ["name", "area_m2", "linear_mass_kg_per_m"]
PIPE_HEADER = ["npd", "schedule", "outer_diameter_m", "thickness_m"]
MATERIAL_HEADER = ["name", "density_ton_per_m3"]


def normalize_name(name: str) -> str:
    return name.strip().casefold().replace("×", "x")


@dataclass(frozen=True)
class SectionRecord:
    """A steel profile: cross-section area (m^2) and linear mass (kg/m)."""

    name: str
    area: float
    linear_mass: float

    def __post_init__(self):
        if not (self.area > 0 and math.isfinite(self.area)):
            raise CatalogError(f"section '{self.name}': area must be positive, got {self.area}")
        if not (self.linear_mass > 0 and math.isfinite(self.linear_mass)):
            raise CatalogError(
                f"section '{self.name}': linear mass must be positive, got {self.linear_mass}"
            )


@dataclass(frozen=True)
class PipeRecord:
    """A pipe schedule row: outer diameter and wall thickness in meters."""

    npd: str
    schedule: str
    outer_diameter: float
    thickness: float

    def __post_init__(self):
        if not (math.isfinite(self.outer_diameter) and math.isfinite(self.thickness)):
            raise CatalogError(f"pipe {self.npd}/{self.schedule}: non-finite geometry")
        if not 0 < self.thickness < self.outer_diameter / 2:
            raise CatalogError(
                f"pipe {self.npd}/{self.schedule}: thickness {self.thickness} must satisfy "
                f"0 < t < OD/2 (OD = {self.outer_diameter})"
            )


@dataclass(frozen=True)
class Material:
    name: str
    density: float  # ton/m^3

    def __post_init__(self):
        if not (self.density > 0 and math.isfinite(self.density)):
            raise CatalogError(f"material '{self.name}': density must be positive, got {self.density}")


@dataclass(frozen=True)
class CatalogSet:
    """Immutable catalog bundle; keys are normalized, records keep raw names."""

    sections: dict[str, SectionRecord]
    pipes: dict[tuple[str, str], PipeRecord]
    materials: dict[str, Material]


def _rows(name: str, content: str, header: list[str]):
    reader = csv.reader(io.StringIO(content))
    try:
        got = next(reader)
    except StopIteration:
        raise CatalogError(f"{name}: empty file, expected header {','.join(header)}") from None
    if [h.strip() for h in got] != header:
        raise CatalogError(f"{name}: bad header {got!r}, expected {','.join(header)}")
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise CatalogError(f"{name} row {row_no}: expected {len(header)} columns, got {len(row)}")
        yield row_no, [cell.strip() for cell in row]


def _number(name: str, row_no: int, column: str, cell: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise CatalogError(f"{name} row {row_no}: non-numeric {column} {cell!r}") from None
    if not math.isfinite(value):
        raise CatalogError(f"{name} row {row_no}: non-finite {column} {cell!r}")
    return value


def load_catalogs(section_csv: str, pipe_csv: str, material_csv: str) -> CatalogSet:
    """Parse and validate the three catalog CSVs into a CatalogSet."""
    sections: dict[str, SectionRecord] = {}
    for row_no, (name, area, lm) in _rows("sections", section_csv, SECTION_HEADER):
        record = SectionRecord(
            name=name,
            area=_number("sections", row_no, "area", area),
            linear_mass=_number("sections", row_no, "linear mass", lm),
        )
        key = normalize_name(name)
        if key in sections:
            raise CatalogError(f"sections row {row_no}: duplicate section '{name}'")
        sections[key] = record

    pipes: dict[tuple[str, str], PipeRecord] = {}
    for row_no, (npd, schedule, od, t) in _rows("pipes", pipe_csv, PIPE_HEADER):
        record = PipeRecord(
            npd=npd,
            schedule=schedule,
            outer_diameter=_number("pipes", row_no, "outer diameter", od),
            thickness=_number("pipes", row_no, "thickness", t),
        )
        key = (normalize_name(npd), normalize_name(schedule))
        if key in pipes:
            raise CatalogError(f"pipes row {row_no}: duplicate pipe {npd}/{schedule}")
        pipes[key] = record

    materials: dict[str, Material] = {}
    for row_no, (name, density) in _rows("materials", material_csv, MATERIAL_HEADER):
        record = Material(name=name, density=_number("materials", row_no, "density", density))
        key = normalize_name(name)
        if key in materials:
            raise CatalogError(f"materials row {row_no}: duplicate material '{name}'")
        materials[key] = record

    return CatalogSet(sections=sections, pipes=pipes, materials=materials)


def dump_catalogs(catalogs: CatalogSet) -> tuple[str, str, str]:
    """Serialize back to the three CSVs; reloading yields an identical set."""
    out_s = io.StringIO()
    w = csv.writer(out_s, lineterminator="\n")
    w.writerow(SECTION_HEADER)
    for record in catalogs.sections.values():
        w.writerow([record.name, repr(record.area), repr(record.linear_mass)])

    out_p = io.StringIO()
    w = csv.writer(out_p, lineterminator="\n")
    w.writerow(PIPE_HEADER)
    for record in catalogs.pipes.values():
        w.writerow([record.npd, record.schedule, repr(record.outer_diameter), repr(record.thickness)])

    out_m = io.StringIO()
    w = csv.writer(out_m, lineterminator="\n")
    w.writerow(MATERIAL_HEADER)
    for record in catalogs.materials.values():
        w.writerow([record.name, repr(record.density)])

    return out_s.getvalue(), out_p.getvalue(), out_m.getvalue()


def lookup_section(catalogs: CatalogSet, element_name: str) -> SectionRecord | None:
    """Exact match on the normalized name; None is a normal not-found outcome."""
    return catalogs.sections.get(normalize_name(element_name))


def lookup_pipe(catalogs: CatalogSet, npd: str, schedule: str) -> PipeRecord | None:
    return catalogs.pipes.get((normalize_name(npd), normalize_name(schedule)))


def lookup_material(catalogs: CatalogSet, name: str) -> Material | None:
    return catalogs.materials.get(normalize_name(name))


def pipe_inner_diameter(record: PipeRecord) -> float:
    """Inner diameter: OD - 2t (positive by the record invariant)."""
    return record.outer_diameter - 2.0 * record.thickness
