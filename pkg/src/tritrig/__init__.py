"""Constrained trivariate trigonometric bases and triangular trigonometric patches."""
from .exceptions import (
    BasisIndexError,
    ConditioningError,
    ConditioningWarning,
    ConfigurationError,
    DomainError,
    EvaluationSingularityError,
    NotRepresentableError,
    SingularSystemError,
    UnsupportedOrderError,
)
from .univariate import UnivariateBasis, bernstein_limit_error, eval_A, make_univariate
from .trivariate_basis import (
    BasisIndex,
    DomainPoint,
    TrivariateSystem,
    delta,
    eval_family,
    eval_R,
    eval_system,
    index_list,
    restrict_boundary,
)
from .normalization import (
    NormalizationTable,
    blending_matrix,
    closed_form_table,
    eval_blending,
    level1_closed_form,
    make_table,
    solve_table,
)
from .span_analysis import (
    CoeffTriple,
    EquivClass,
    SpanBasisV,
    build_V,
    equivalent,
    fit_in_span,
    independence_rank,
)
from .patches import (
    ControlNet,
    RationalTrigPatch,
    TrigPatch,
    WeightNet,
    affine_check,
    boundary_curve,
    eval_patch,
    eval_rational,
)
from .geometries import CyclideParams, TorusParams, cyclide_patch, torus_net
from .elevation import (
    BezierTriangleNet,
    coefficient_relation_1_to_2,
    elevate_1_to_2,
    to_bezier_limit,
)
from .mesh import Mesh, tessellate

__version__ = "0.1.0"
