"""liefol: exact Lie calculus for polynomial vector fields, algebraic
foliations, planar fields at infinity, and a hyperbolic suspension bench.

The symbolic kernel (charts, polynomials, rational functions) is exact
over Q; the hyperbolic module is the only numeric corner, and even
there states and cocycles are exact with floats at the reporting edge.
"""

from .poly import (
    Chart,
    ChartMismatchError,
    ExactDivisionError,
    Poly,
    RatFunc,
    clear_denominators,
    content,
    divexact,
    divides,
    format_poly,
    gcd,
    lcm,
    normalize,
    poly_det,
    rational_content,
    resultant,
    squarefree_part,
)
from .expr import ParseError, parse_field_coefficients, parse_polynomial
from .liecalc import (
    FlowSeries,
    VectorField,
    apply_derivation,
    flow_series_field,
    flow_series_function,
    jacobian_matrix,
    lie_bracket,
    lie_connection_matrix,
)
from .dmod import (
    Connection,
    DMorphismResult,
    MorphismPreconditionError,
    PolyMap,
    check_dmorphism,
    nabla_apply,
    pullback_connection,
)
from .foliation import (
    FoliationGens,
    InvarianceResult,
    InvolutivityResult,
    SingularIdeal,
    generic_rank,
    invariant_hypersurface,
    is_invariant_subsheaf,
    is_involutive,
    same_rank1_foliation,
    saturate_rank1,
    singular_locus,
    tangent_foliation,
)
from .planar import (
    CONSISTENT,
    EXCLUDED,
    InfinityReport,
    PlanarField,
    infinity_analysis,
    invariant_curve_constraint,
    q_polynomial,
    rational_roots,
    to_infinity_chart,
)
from .hyperbolic import (
    CAT,
    AnosovReport,
    LabeledLine,
    LabeledPlane,
    SuspensionState,
    TangentFrame,
    cat_power,
    classify_invariant_lines,
    classify_invariant_planes,
    crossings,
    differential_flow,
    fixed_point,
    leaf_density,
    line_is_invariant,
    plane_is_invariant,
    return_map_matrix,
    suspension_flow,
    torus_distance,
    verify_anosov_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "Chart",
    "ChartMismatchError",
    "ExactDivisionError",
    "Poly",
    "RatFunc",
    "clear_denominators",
    "content",
    "divexact",
    "divides",
    "format_poly",
    "gcd",
    "lcm",
    "normalize",
    "poly_det",
    "rational_content",
    "resultant",
    "squarefree_part",
    "ParseError",
    "parse_field_coefficients",
    "parse_polynomial",
    "FlowSeries",
    "VectorField",
    "apply_derivation",
    "flow_series_field",
    "flow_series_function",
    "jacobian_matrix",
    "lie_bracket",
    "lie_connection_matrix",
    "Connection",
    "DMorphismResult",
    "MorphismPreconditionError",
    "PolyMap",
    "check_dmorphism",
    "nabla_apply",
    "pullback_connection",
    "FoliationGens",
    "InvarianceResult",
    "InvolutivityResult",
    "SingularIdeal",
    "generic_rank",
    "invariant_hypersurface",
    "is_invariant_subsheaf",
    "is_involutive",
    "same_rank1_foliation",
    "saturate_rank1",
    "singular_locus",
    "tangent_foliation",
    "CONSISTENT",
    "EXCLUDED",
    "InfinityReport",
    "PlanarField",
    "infinity_analysis",
    "invariant_curve_constraint",
    "q_polynomial",
    "rational_roots",
    "to_infinity_chart",
    "CAT",
    "AnosovReport",
    "LabeledLine",
    "LabeledPlane",
    "SuspensionState",
    "TangentFrame",
    "cat_power",
    "classify_invariant_lines",
    "classify_invariant_planes",
    "crossings",
    "differential_flow",
    "fixed_point",
    "leaf_density",
    "line_is_invariant",
    "plane_is_invariant",
    "return_map_matrix",
    "suspension_flow",
    "torus_distance",
    "verify_anosov_bounds",
    "__version__",
]
