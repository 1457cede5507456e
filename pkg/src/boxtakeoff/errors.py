"""Exception types raised by the take-off engine."""


class TakeoffError(Exception):
    """Base class for all engine errors."""


class SceneError(TakeoffError):
    """Scene file is malformed or violates a scene invariant."""


class MeshError(TakeoffError):
    """Mesh file is malformed or a mesh precondition is violated."""


class WatertightnessError(MeshError):
    """Mesh is not edge-manifold; volume is undefined."""


class CatalogError(TakeoffError):
    """Catalog CSV is malformed or a record violates its invariants."""


class FilterError(TakeoffError):
    """Filter or work-area definition is malformed."""


class EstimationError(TakeoffError):
    """An element cannot be classified or quantified."""

    def __init__(self, message: str, element_id: str | None = None):
        super().__init__(message)
        self.element_id = element_id
