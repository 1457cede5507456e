"""Element classification and volume/mass estimation from bounding boxes.

Five shape classes, five volume rules:

* box:             V = Lx * Ly * Lz
* solid cylinder:  V = pi * D^2 / 4 * H, D from the box's equal extent pair
* hollow pipe:     V = pi/4 * (OD^2 - ID^2) * L, annulus area times length
* profile:         V = Ar * L_max, catalog cross-section times longest extent
* rotated profile: V = Ar * sqrt(Lx^2 + Ly^2 + Lz^2), diagonal as length

Mass uses the section's linear mass (kg/m) when a section record applies,
otherwise volume times material density (ton/m^3, converted to kg). All
arithmetic is double precision; rounding happens only at report
serialization.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .catalogs import (
    CatalogSet,
    Material,
    PipeRecord,
    SectionRecord,
    lookup_material,
    lookup_pipe,
    lookup_section,
    pipe_inner_diameter,
)
from .errors import EstimationError
from .geometry import Aabb
from .scene import Element

EQUAL_EXTENT_RTOL = 1e-3  # BIM exports carry float noise; "equal" is relative

# A straight axis-aligned member has one long extent; its two short ones
# are the section envelope, roughly 3 * sqrt(area) for common profiles.
# More than one extent beyond 1.5x that envelope means the member cannot
# be axis-aligned. Heuristic fallback only; an explicit
# orientation="rotated" property always wins.
ENVELOPE_FACTOR = 3.0
ROTATION_SLACK = 1.5


class ShapeClass(enum.Enum):
    BOX = "box"
    SOLID_CYLINDER = "cylinder"
    HOLLOW_PIPE = "pipe"
    PROFILE = "profile"
    ROTATED_PROFILE = "rotated-profile"


@dataclass(frozen=True)
class QuantityRow:
    """Per-element estimate: extents, governing length, area, volume, mass."""

    element_id: str
    element_type: str
    lx: float
    ly: float
    lz: float
    length: float
    area: float
    volume: float
    mass_basis: float  # kg/m for the section pathway, ton/m^3 otherwise
    mass: float  # kg


def box_volume(aabb: Aabb) -> float:
    """Bounding-box volume: product of the three extents."""
    lx, ly, lz = aabb.extents()
    return lx * ly * lz


def _close(a: float, b: float, rtol: float = EQUAL_EXTENT_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def _equal_pair(extents: tuple[float, float, float]):
    """Best matching extent pair -> (pair mean, remaining extent) or None."""
    best = None
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        a, b = extents[i], extents[j]
        if _close(a, b):
            gap = abs(a - b) / max(abs(a), abs(b), 1e-300)
            if best is None or gap < best[0]:
                best = (gap, (a + b) / 2.0, extents[k])
    if best is None:
        return None
    return best[1], best[2]


def cylinder_volume(aabb: Aabb) -> tuple[float, float, float]:
    """(diameter, height, volume) for a solid cylinder bounding box.

    The diameter is the mean of the box's two equal extents (equal within
    a relative 1e-3); the remaining extent is the height.
    """
    pair = _equal_pair(aabb.extents())
    if pair is None:
        raise EstimationError(
            f"no two equal extents within {EQUAL_EXTENT_RTOL:g} relative: {aabb.extents()}"
        )
    diameter, height = pair
    return diameter, height, math.pi * diameter * diameter / 4.0 * height


def pipe_volume(record: PipeRecord, length: float) -> tuple[float, float]:
    """(annulus area, volume) of a straight pipe of the given length."""
    if not length > 0:
        raise EstimationError(f"pipe length must be positive, got {length}")
    od = record.outer_diameter
    inner = pipe_inner_diameter(record)
    area = math.pi / 4.0 * (od * od - inner * inner)
    return area, area * length


def profile_volume(area: float, aabb: Aabb) -> tuple[float, float]:
    """(length, volume) of an axis-aligned prismatic member.

    Length is the longest box extent regardless of axis; volume is the
    catalog cross-section area times that length.
    """
    if not area > 0:
        raise EstimationError(f"cross-section area must be positive, got {area}")
    length = max(aabb.extents())
    return length, area * length


def rotated_profile_volume(area: float, aabb: Aabb) -> tuple[float, float]:
    """(length, volume) of a prismatic member not aligned to any axis.

    Length is the box diagonal sqrt(Lx^2 + Ly^2 + Lz^2), which never
    under-estimates the true member length and reduces to the longest
    extent when the other two are zero.
    """
    if not area > 0:
        raise EstimationError(f"cross-section area must be positive, got {area}")
    lx, ly, lz = aabb.extents()
    length = math.sqrt(lx * lx + ly * ly + lz * lz)
    return length, area * length


def element_mass(
    volume: float,
    length: float,
    section: SectionRecord | None = None,
    material: Material | None = None,
) -> float:
    """Mass in kg: linear mass * length when a section applies, else
    volume * density with ton converted to kg."""
    if section is not None:
        return section.linear_mass * length
    if material is not None:
        return volume * material.density * 1000.0
    raise EstimationError("no mass basis: neither a section record nor a material applies")


def _looks_like_piping(element: Element) -> bool:
    material = element.properties.get("material", "")
    discipline = element.properties.get("discipline", "")
    return "pipe" in material.casefold() or discipline.casefold() == "piping"


def _section_envelope(section: SectionRecord) -> float:
    return ENVELOPE_FACTOR * math.sqrt(section.area)


def _profile_is_rotated(element: Element, section: SectionRecord | None) -> bool:
    if element.properties.get("orientation", "").casefold() == "rotated":
        return True
    if section is None or element.aabb is None:
        return False
    limit = ROTATION_SLACK * _section_envelope(section)
    long_extents = sum(1 for e in element.aabb.extents() if e > limit)
    return long_extents >= 2


def classify(element: Element, catalogs: CatalogSet) -> ShapeClass:
    """Pick the shape class for an element.

    Precedence: explicit ``shape`` property, then pipe metadata resolving
    in the pipe catalog, then the element name resolving in the section
    catalog (with rotation upgrade), then the solid-cylinder geometry
    heuristic for piping materials, then box.
    """
    if element.aabb is None:
        raise EstimationError(f"element '{element.id}' has no AABB", element.id)

    shape = element.properties.get("shape")
    if shape is not None:
        shape_l = shape.strip().casefold()
        if shape_l == "box":
            return ShapeClass.BOX
        if shape_l == "cylinder":
            return ShapeClass.SOLID_CYLINDER
        if shape_l == "pipe":
            return ShapeClass.HOLLOW_PIPE
        if shape_l == "profile":
            section = lookup_section(catalogs, element.name)
            if _profile_is_rotated(element, section):
                return ShapeClass.ROTATED_PROFILE
            return ShapeClass.PROFILE
        raise EstimationError(f"element '{element.id}': unknown shape '{shape}'", element.id)

    npd = element.properties.get("npd")
    schedule = element.properties.get("schedule")
    if npd is not None and schedule is not None and lookup_pipe(catalogs, npd, schedule) is not None:
        return ShapeClass.HOLLOW_PIPE

    section = lookup_section(catalogs, element.name)
    if section is not None:
        if _profile_is_rotated(element, section):
            return ShapeClass.ROTATED_PROFILE
        return ShapeClass.PROFILE

    if _equal_pair(element.aabb.extents()) is not None and _looks_like_piping(element):
        return ShapeClass.SOLID_CYLINDER

    return ShapeClass.BOX


def _require_material(element: Element, catalogs: CatalogSet) -> Material:
    name = element.properties.get("material")
    if name is None:
        raise EstimationError(
            f"element '{element.id}': no mass basis (no section match and no material property)",
            element.id,
        )
    material = lookup_material(catalogs, name)
    if material is None:
        raise EstimationError(f"element '{element.id}': unknown material '{name}'", element.id)
    return material


def _require_section(element: Element, catalogs: CatalogSet) -> SectionRecord:
    section = lookup_section(catalogs, element.name)
    if section is None:
        raise EstimationError(
            f"element '{element.id}': no section record for '{element.name}'", element.id
        )
    return section


def _pipe_record(element: Element, catalogs: CatalogSet) -> PipeRecord:
    npd = element.properties.get("npd")
    schedule = element.properties.get("schedule")
    if npd is None or schedule is None:
        raise EstimationError(
            f"element '{element.id}': pipe element needs 'npd' and 'schedule' properties",
            element.id,
        )
    record = lookup_pipe(catalogs, npd, schedule)
    if record is None:
        raise EstimationError(
            f"element '{element.id}': no pipe record for npd={npd} schedule={schedule}",
            element.id,
        )
    return record


def _effective_pipe_record(record: PipeRecord, extents: tuple[float, float, float]) -> PipeRecord:
    # The model's own bounding box carries the as-built OD: when the two
    # non-length extents agree they replace the nominal catalog OD
    # (catalog thickness is kept; nominal OD is the fallback).
    rest = sorted(extents)[:2]
    if _close(rest[0], rest[1]):
        od = (rest[0] + rest[1]) / 2.0
        if od > 2.0 * record.thickness:
            return replace(record, outer_diameter=od)
    return record


def estimate(element: Element, catalogs: CatalogSet) -> QuantityRow:
    """Classify one element and produce its complete quantity row."""
    shape = classify(element, catalogs)
    aabb = element.aabb
    assert aabb is not None  # classify() already rejected missing boxes
    lx, ly, lz = aabb.extents()

    try:
        if shape is ShapeClass.BOX:
            volume = box_volume(aabb)
            length = max(lx, ly, lz)
            area = 0.0
            material = _require_material(element, catalogs)
            mass_basis = material.density
            mass = element_mass(volume, length, material=material)
        elif shape is ShapeClass.SOLID_CYLINDER:
            diameter, length, volume = cylinder_volume(aabb)
            area = math.pi * diameter * diameter / 4.0
            material = _require_material(element, catalogs)
            mass_basis = material.density
            mass = element_mass(volume, length, material=material)
        elif shape is ShapeClass.HOLLOW_PIPE:
            record = _effective_pipe_record(_pipe_record(element, catalogs), (lx, ly, lz))
            length = max(lx, ly, lz)
            area, volume = pipe_volume(record, length)
            material = _require_material(element, catalogs)
            mass_basis = material.density
            mass = element_mass(volume, length, material=material)
        else:
            section = _require_section(element, catalogs)
            if shape is ShapeClass.ROTATED_PROFILE:
                length, volume = rotated_profile_volume(section.area, aabb)
            else:
                length, volume = profile_volume(section.area, aabb)
            area = section.area
            mass_basis = section.linear_mass
            mass = element_mass(volume, length, section=section)
    except EstimationError as exc:
        if exc.element_id is None:
            raise EstimationError(f"element '{element.id}': {exc}", element.id) from None
        raise

    return QuantityRow(
        element_id=element.id,
        element_type=element.name,
        lx=lx,
        ly=ly,
        lz=lz,
        length=length,
        area=area,
        volume=volume,
        mass_basis=mass_basis,
        mass=mass,
    )


def estimate_volume(element: Element, catalogs: CatalogSet) -> tuple[ShapeClass, float]:
    """Volume-only estimate (no mass basis required); used for validation."""
    shape = classify(element, catalogs)
    aabb = element.aabb
    assert aabb is not None
    if shape is ShapeClass.BOX:
        return shape, box_volume(aabb)
    if shape is ShapeClass.SOLID_CYLINDER:
        return shape, cylinder_volume(aabb)[2]
    if shape is ShapeClass.HOLLOW_PIPE:
        record = _effective_pipe_record(_pipe_record(element, catalogs), aabb.extents())
        return shape, pipe_volume(record, max(aabb.extents()))[1]
    section = _require_section(element, catalogs)
    if shape is ShapeClass.ROTATED_PROFILE:
        return shape, rotated_profile_volume(section.area, aabb)[1]
    return shape, profile_volume(section.area, aabb)[1]
