"""Exact criteria for geometric k-normality of nodal and cuspidal curves on
surfaces, with an exact-rank oracle for plane point conditions."""

from .lattice import (
    DivisorClass,
    LatticeError,
    SurfaceKind,
    SurfaceModel,
    arithmetic_genus,
    complete_intersection,
    general_lattice,
    geometric_genus,
    hodge_number,
    intersect,
    is_big_and_nef,
    is_nef,
    parse_divisor,
    parse_surface,
    projective_plane,
    smooth_quadric,
)
from .criteria import (
    CriteriaError,
    Outcome,
    bogomolov_discriminant,
    brill_noether_rho,
    castelnuovo_max_genus,
    check_hypotheses,
    ci_bound,
    delta_bound,
    gkn_sufficient,
    instability_quadratic,
    obstruction_2normal,
    plane_severi_bound,
    severi_regularity_sufficient,
    zero_regularity_equiv,
)
from .oracle import (
    PlanePoint,
    PointConditionScheme,
    evaluation_matrix,
    exact_rank,
    independent_conditions,
    random_configuration,
    verify_plane_severi,
)

__version__ = "0.1.0"
