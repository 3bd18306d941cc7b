"""Exact holonomy trace polynomials of curves on plumbed surfaces.

Given a pants decomposition and the Dehn-Thurston coordinates of a simple
closed curve, this package reconstructs the curve, compiles its holonomy
word under the plumbing construction, evaluates the word exactly over
Gaussian-integer polynomials in the gluing parameters, and verifies the
closed-form description of the polynomial's two top graded orders.
"""

from .dtcoords import (
    ArcCounts,
    CoordError,
    DTCoords,
    NegativeTwistOnZeroLength,
    ParityViolation,
    arc_counts,
    coords_from_triple,
    window_twists,
    dual_curve_coords,
    triple_from_coords,
    twist_curve,
    validate,
)
from .gausspoly import GaussInt, GaussPoly, Mat2, canonical_sign, kernel_name
from .holonomy import (
    annulus_from_gluing_parameter,
    evaluate_word,
    gluing_parameter_from_annulus,
    trace_of_curve,
)
from .standardpos import (
    Component,
    Word,
    extract_components,
    layout_endpoints,
    match_strands,
    scc_count,
)
from .surface import (
    Gluing,
    PantsDecomposition,
    SurfaceError,
    build_surface,
    four_holed_sphere,
    genus_two,
    load_surface,
    one_holed_torus,
    parse_surface,
    twice_holed_torus,
)
from .verifier import TopTermReport, predict_top_terms, verify

__version__ = "0.1.0"

__all__ = [
    "ArcCounts",
    "Component",
    "CoordError",
    "DTCoords",
    "GaussInt",
    "GaussPoly",
    "Gluing",
    "Mat2",
    "NegativeTwistOnZeroLength",
    "PantsDecomposition",
    "ParityViolation",
    "SurfaceError",
    "TopTermReport",
    "Word",
    "annulus_from_gluing_parameter",
    "arc_counts",
    "build_surface",
    "canonical_sign",
    "coords_from_triple",
    "window_twists",
    "dual_curve_coords",
    "evaluate_word",
    "extract_components",
    "triple_from_coords",
    "four_holed_sphere",
    "genus_two",
    "gluing_parameter_from_annulus",
    "kernel_name",
    "layout_endpoints",
    "load_surface",
    "match_strands",
    "one_holed_torus",
    "parse_surface",
    "predict_top_terms",
    "scc_count",
    "trace_of_curve",
    "twice_holed_torus",
    "twist_curve",
    "validate",
    "verify",
]
