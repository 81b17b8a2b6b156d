"""Square-tiled surfaces as permutation pairs, their diagonal
subdivisions into tricolored triangulations, and the numerical
coordinate maps that realize each tile in the plane."""

from .cartography import (
    CellIndex,
    CellKind,
    Dessin,
    InvalidDessinError,
    Violation,
    is_isomorphic,
)
from .metric import (
    AffineChart,
    FaceDegreeMismatch,
    MetricData,
    chart_transition,
    cone_angle,
    equilateral_structure,
    face_closure_residual,
    metric_violations,
    square_structure,
)
from .tiling import (
    Color,
    InconsistentLabelsError,
    NonBipartiteError,
    NotSquareTilingError,
    Shade,
    TricoloredDessin,
    VertexLabel,
    corner_bipartition,
    diagonal_subdivision,
    is_square_tiling,
    refine_2x2,
    tricolored_from_labels,
    validate_tricoloring,
)
from .belyi import (
    INFINITY,
    InconsistentPassportError,
    Passport,
    barycentric_rational,
    barycentric_subdivide,
    passport,
    riemann_hurwitz_genus,
)
from .csmap import (
    CsMapSpec,
    CutCrossingError,
    NonConvergenceError,
    OutsideImageError,
    QuadratureConfig,
    SQUARE_CELL,
    SQUARE_COORD,
    TRIANGLE_COORD,
    complete_beta,
    cs_map,
    cs_map_derivative,
    image_triangle,
    incomplete_cs_integral,
    invert_cs_map,
    named_spec,
    triangle_to_square,
)

__version__ = "0.1.0"

__all__ = [
    "AffineChart",
    "CellIndex",
    "CellKind",
    "Color",
    "CsMapSpec",
    "CutCrossingError",
    "Dessin",
    "FaceDegreeMismatch",
    "INFINITY",
    "InconsistentLabelsError",
    "InconsistentPassportError",
    "InvalidDessinError",
    "MetricData",
    "NonBipartiteError",
    "NonConvergenceError",
    "NotSquareTilingError",
    "OutsideImageError",
    "Passport",
    "QuadratureConfig",
    "SQUARE_CELL",
    "SQUARE_COORD",
    "Shade",
    "TRIANGLE_COORD",
    "TricoloredDessin",
    "VertexLabel",
    "Violation",
    "barycentric_rational",
    "barycentric_subdivide",
    "chart_transition",
    "complete_beta",
    "cone_angle",
    "corner_bipartition",
    "cs_map",
    "cs_map_derivative",
    "diagonal_subdivision",
    "equilateral_structure",
    "face_closure_residual",
    "image_triangle",
    "incomplete_cs_integral",
    "invert_cs_map",
    "is_isomorphic",
    "is_square_tiling",
    "metric_violations",
    "named_spec",
    "passport",
    "refine_2x2",
    "riemann_hurwitz_genus",
    "square_structure",
    "tricolored_from_labels",
    "triangle_to_square",
    "validate_tricoloring",
]
