"""Bounding-box quantity take-off engine for BIM scene files."""

from .catalogs import (
    CatalogSet,
    Material,
    PipeRecord,
    SectionRecord,
    dump_catalogs,
    load_catalogs,
    lookup_material,
    lookup_pipe,
    lookup_section,
    pipe_inner_diameter,
)
from .errors import (
    CatalogError,
    EstimationError,
    FilterError,
    MeshError,
    SceneError,
    TakeoffError,
    WatertightnessError,
)
from .estimator import (
    QuantityRow,
    ShapeClass,
    box_volume,
    classify,
    cylinder_volume,
    element_mass,
    estimate,
    estimate_volume,
    pipe_volume,
    profile_volume,
    rotated_profile_volume,
)
from .filters import (
    And,
    Not,
    Or,
    Predicate,
    WorkArea,
    apply_filter,
    assign_work_area,
    eval_filter,
    load_filters,
    load_work_areas,
    save_filters,
    save_work_areas,
)
from .geometry import (
    KERNEL_BACKEND,
    Aabb,
    Point3,
    TriangleMesh,
    compute_aabb,
    is_watertight,
    mesh_volume,
    signed_mesh_volume,
)
from .boxexport import bbox_to_mesh, export_boxes
from .objio import parse_mesh, parse_objects, serialize_mesh
from .reporting import ComparisonResult, RollUp, compare_known, roll_up, write_report
from .scene import Element, Scene, load_scene, parse_scene, resolve_meshes

__version__ = "0.1.0"
