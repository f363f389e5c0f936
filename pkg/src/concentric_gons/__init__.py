"""Two regular n-gons and n concentric circles: decide and construct the
correspondence in both directions.

Polygons to circles: every pair of regular n-gons whose auxiliary circles
meet admits concentric circles through one vertex of each (``pairing``).
Circles to polygons: a radii family passing two algebraic conditions on its
power averages is realized by exactly two polygons, recovered in closed
form (``moments``, ``reconstruct``), with dedicated closed forms for
triangles and squares (``special``) and brute-force cross-checks
(``oracle``).
"""

from .errors import (
    CoincidentAuxiliaryCircles,
    CoincidentCircles,
    DegenerateGeometry,
    GeometryError,
    InfeasibleFamily,
    InfeasibleMoments,
    InvalidMomentOrder,
    MismatchedOrder,
    NoSharedVertex,
    NotACandidateCenter,
    PhaseSearchFailed,
    SumConditionViolated,
    TriangleInequalityViolated,
)
from .geom import (
    DEFAULT_TOLERANCE,
    PlanePoint,
    RegularPolygonSpec,
    Tolerance,
    circle_circle_intersection,
    distance_multiset,
    heron_area,
    multiset_close,
    normalize_angle,
    vertices,
)
from .moments import (
    CircleFamily,
    CyclicAverages,
    FeasibilityReport,
    RadiiPair,
    assess_feasibility,
    condition_one,
    condition_two,
    cyclic_averages,
    higher_average_prediction,
    recover_circumradii,
    two_radius_power_sum,
)
from .oracle import (
    RandomInstance,
    SplitMix64,
    angle_sweep,
    power_identity_residual,
    random_instance,
)
from .pairing import (
    PairingResult,
    align_second_polygon,
    auxiliary_circles,
    candidate_centers,
    intersection_feasible,
    pair_polygons,
    shared_vertex_pairing,
)
from .reconstruct import (
    Reconstruction,
    phase_candidates,
    reconstruct_polygons,
    verify_reconstruction,
)
from .special import (
    AssociatedTriangleSet,
    CubicResidual,
    SquareFit,
    TriangleFit,
    associated_triangles,
    square_circle_radii,
    square_cubic_residual,
    square_feasibility,
    triangle_circle_radii,
    triangle_feasibility,
)

__version__ = "0.1.0"

__all__ = [
    "AssociatedTriangleSet",
    "CircleFamily",
    "CoincidentAuxiliaryCircles",
    "CoincidentCircles",
    "CubicResidual",
    "CyclicAverages",
    "DEFAULT_TOLERANCE",
    "DegenerateGeometry",
    "FeasibilityReport",
    "GeometryError",
    "InfeasibleFamily",
    "InfeasibleMoments",
    "InvalidMomentOrder",
    "MismatchedOrder",
    "NoSharedVertex",
    "NotACandidateCenter",
    "PairingResult",
    "PhaseSearchFailed",
    "PlanePoint",
    "RadiiPair",
    "RandomInstance",
    "Reconstruction",
    "RegularPolygonSpec",
    "SplitMix64",
    "SquareFit",
    "SumConditionViolated",
    "Tolerance",
    "TriangleFit",
    "TriangleInequalityViolated",
    "align_second_polygon",
    "angle_sweep",
    "assess_feasibility",
    "associated_triangles",
    "auxiliary_circles",
    "candidate_centers",
    "circle_circle_intersection",
    "condition_one",
    "condition_two",
    "cyclic_averages",
    "distance_multiset",
    "heron_area",
    "higher_average_prediction",
    "intersection_feasible",
    "multiset_close",
    "normalize_angle",
    "pair_polygons",
    "phase_candidates",
    "power_identity_residual",
    "random_instance",
    "reconstruct_polygons",
    "recover_circumradii",
    "shared_vertex_pairing",
    "square_circle_radii",
    "square_cubic_residual",
    "square_feasibility",
    "triangle_circle_radii",
    "triangle_feasibility",
    "two_radius_power_sum",
    "verify_reconstruction",
    "vertices",
]
