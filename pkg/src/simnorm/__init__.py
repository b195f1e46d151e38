"""Canonical representatives of plane triangles and quadrilaterals up to similarity."""

from .conversions import (
    DEGENERATE,
    angles_from_normal_point,
    angles_from_sides,
    normal_point_from_angles,
    normal_point_from_sides,
    sides_from_angles,
)
from .errors import (
    ArityMismatch,
    DegenerateAngles,
    DegenerateQuad,
    DegenerateSegment,
    GeometryError,
    InvalidSides,
    OutOfDomain,
    PreconditionViolated,
    UnboundedType,
)
from .geometry import (
    DEFAULT_TOL,
    ORIGIN,
    UNIT_X,
    Point,
    SimilarityTransform,
    Tolerance,
    distance,
    lex_less,
    quasilex_eq,
    quasilex_leq,
    quasilex_pair_leq,
    reflect_normalize,
    similarity_from_segment,
)
from .quads import (
    ANCHOR_A,
    ANCHOR_B,
    QuadNormalForm,
    Quadrilateral,
    in_d_region,
    normalize_quad,
    quads_similar,
    reflection_orbit_type_count,
)
from .triangles import (
    AngleClass,
    AngleTriple,
    FormKind,
    SideClass,
    SideLengths,
    Triangle,
    TriangleClass,
    a_normal_point,
    b_normal_point,
    c_normal_point,
    circle_normal_form,
    classify,
    equilateral_point,
    in_a_domain,
    in_b_domain,
    in_c_domain,
    in_domain,
    is_normal_circle_triangle,
    normal_point,
    side_lengths,
    triangle_from_sides,
    triangles_similar,
)

__version__ = "0.1.0"

__all__ = [
    "ANCHOR_A",
    "ANCHOR_B",
    "AngleClass",
    "AngleTriple",
    "ArityMismatch",
    "DEFAULT_TOL",
    "DEGENERATE",
    "DegenerateAngles",
    "DegenerateQuad",
    "DegenerateSegment",
    "FormKind",
    "GeometryError",
    "InvalidSides",
    "ORIGIN",
    "OutOfDomain",
    "Point",
    "PreconditionViolated",
    "QuadNormalForm",
    "Quadrilateral",
    "SideClass",
    "SideLengths",
    "SimilarityTransform",
    "Tolerance",
    "Triangle",
    "TriangleClass",
    "UNIT_X",
    "UnboundedType",
    "a_normal_point",
    "angles_from_normal_point",
    "angles_from_sides",
    "b_normal_point",
    "c_normal_point",
    "circle_normal_form",
    "classify",
    "distance",
    "equilateral_point",
    "in_a_domain",
    "in_b_domain",
    "in_c_domain",
    "in_d_region",
    "in_domain",
    "is_normal_circle_triangle",
    "lex_less",
    "normal_point",
    "normal_point_from_angles",
    "normal_point_from_sides",
    "normalize_quad",
    "quads_similar",
    "quasilex_eq",
    "quasilex_leq",
    "quasilex_pair_leq",
    "reflect_normalize",
    "side_lengths",
    "sides_from_angles",
    "similarity_from_segment",
    "triangle_from_sides",
    "triangles_similar",
    "__version__",
]
