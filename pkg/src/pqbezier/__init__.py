"""Lupas (p,q)-Bernstein bases, rational (p,q)-Bezier curves and surfaces,
and Lupas (p,q)-Bernstein approximation operators."""

from .basis import (
    basis_row,
    basis_rows,
    basis_single,
    elevation_matrix,
    inverse_symmetry_pair,
    limit_basis,
    limit_basis_row,
    reduction_split,
)
from .curve import (
    CasteljauTrace,
    ControlPolygon,
    Line2D,
    crossing_diagnostics,
    decasteljau,
    decasteljau_matrix,
    elevate,
    elevate_repeated,
    endpoint_derivatives,
    eval_rational,
    reverse,
)
from .errors import DegenerateError, DomainError, VerificationError
from .operators import (
    CORPUS,
    REFERENCE_SCHEDULE,
    ConvergenceRecord,
    ParamSchedule,
    TargetFunction,
    convergence_table,
    limit_operator,
    lupas_operator,
    moments,
    node,
    reflection_pair,
)
from .pq_arith import (
    PQParams,
    Regime,
    euler_partial_product,
    pascal_left,
    pascal_right,
    pq_binomial,
    pq_factorial,
    pq_integer,
)
from .surface import (
    ControlNet,
    IsoDirection,
    decasteljau_surface,
    elevate_surface,
    eval_surface,
    iso_curve,
)

__version__ = "0.1.0"
