"""Algebraic and topological invariants of reduced complex projective plane curves.

Typical use::

    from planecurves import CurveEquation, parse_poly, total_tjurina, classify_freeness

    c = CurveEquation(parse_poly("(y^2*z - x^3)^2 - x^3*y^3"))
    classify_freeness(c.d, total_tjurina(c))   # nearly_free(3, 3)
"""
from .alexander import (
    BettiSummary,
    CyclotomicProduct,
    EigenvalueIndex,
    abelian_alexander,
    cyclotomic_poly,
    expand,
    global_bound,
    milnor_fiber_betti,
    tn_minus_1,
    zariski_filter,
)
from .errors import (
    InexactDivision,
    NonStabilizing,
    NotHomogeneous,
    PlaneCurveError,
    PolySyntaxError,
    ResourceLimit,
    ValidationError,
    ZeroPolynomial,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    colon,
    graded_dim,
    ideal_intersection,
    normal_form,
    saturation,
)
from .invariants import (
    CurveEquation,
    FreenessClass,
    classify_freeness,
    h2_eigenspace_lower_bounds,
    jacobian_ideal,
    nf_dims,
    saturated_jacobian,
    total_tjurina,
)
from .local import (
    CharPairs,
    SingularityRecord,
    delta_invariant,
    genus,
    local_alexander,
    milnor_number,
    newton_to_linking,
)
from .parser import parse_poly, render
from .poly import (
    GREVLEX,
    ELIM,
    MonomialOrder,
    MultiPoly,
    UniPolyZ,
    homogeneous_degree,
    partial_derivative,
    poly_arith,
    univ_eval,
    univ_exact_div,
)
from .report import CurveFile, CurveReport, analyze, load_curve_file

__version__ = "0.1.0"
