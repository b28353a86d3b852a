"""Corridor complexes, window colorings, and diameter-preserving quotients."""

from .bounds import (
    E,
    RegularBoundCheck,
    bound_report,
    check_regular_graph_bound,
    hpm_lower,
    hpm_upper,
    hs_lower,
    hs_upper,
    pm_fvector_check,
    regular_graph_diameter_bound,
)
from .coloring import (
    PRNG_ID,
    Coloring,
    FirstColoringParams,
    PatternHistogram,
    RefineResult,
    RefinementParams,
    coloring_from_text,
    coloring_to_text,
    faces_of_codim,
    first_stage_class_cap,
    greedy_window_coloring,
    identity_coloring,
    intersecting_ridge_bound,
    lll_target_colors,
    moser_tardos_refine,
    pattern_class_histogram,
    pattern_of,
    read_coloring,
    verify_proper,
    verify_unique_ridge_patterns,
    write_coloring,
)
from .complex_core import (
    BoundaryMatrixGF2,
    Complex,
    DualGraph,
    boundary_matrix_gf2,
    complex_from_text,
    complex_to_text,
    diameter_exact,
    double_sweep_lower_bound,
    dual_graph,
    is_pseudomanifold,
    is_strongly_connected,
    pair_distance,
    read_complex,
    ridges_of,
    write_complex,
)
from .constructions import (
    ALPHA,
    OMEGA,
    BoundaryFacetLabel,
    CorridorSpec,
    boundary_corridor,
    diameter_lower_bound_boundary,
    facet_label,
    facet_labels,
    scaled_potential,
    straight_corridor,
)
from .errors import (
    CorridorsError,
    DimensionTooSmall,
    DisconnectedGraph,
    ImproperColoring,
    IncompleteColoring,
    InvalidSpec,
    MissingBijection,
    NoLegalColor,
    NotMiddleFacet,
    NotPseudomanifold,
    NotRegular,
    PreconditionViolated,
    ResampleCapExceeded,
    RetriesExhausted,
    UnknownFacet,
)
from .pipeline import lemma8_floor, run_bench, run_pipeline, strip_volatile
from .quotient import (
    QuotientResult,
    pattern_complex,
    quotient_report,
    verify_boundary_preservation,
)
