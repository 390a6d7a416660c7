"""Lower-bound certificates for the best weak-type (p,p) constants of
centered maximal operators defined by radial, radially decreasing densities
on R^d.

All measure magnitudes are carried in log space, so certificates remain
meaningful at dimensions where ball measures under- or overflow doubles.
"""

from .certificate import (
    Certificate,
    DecpResult,
    DoublingResult,
    GeneralizedDecpResult,
    HypothesisReport,
    LebesgueBallResult,
    ScanRow,
    T1_MAX,
    U_SPLIT,
    besicovitch_upper,
    conjugate_exponent,
    critical_p,
    decp_analytic_floor,
    decp_certificate,
    decp_explicit_constant,
    decp_generalized_certificate,
    doubling_certificate,
    lebesgue_ball_certificate,
    lemma_certificate,
    optimize_v,
    unit_ball_rate_base,
)
from .errors import (
    DegenerateCapError,
    DomainError,
    EmptyTestFunctionError,
    HypothesisViolationError,
    NonSettlingTailError,
    QuadraturePrecisionError,
    UndefinedGrowthError,
)
from .geometry import ConeCapParams, cap_containment_params, doubling_cap_x2, sphere_ball_cap
from .logspace import LogValue, ONE, ZERO
from .oracle import (
    OracleReport,
    empirical_weak_ratio,
    halfspace_masses,
    maximal_at_point,
    run_oracle,
    verify_level_set,
)
from .radial import (
    GrowthProfile,
    RadialDensity,
    Segment,
    density_from_kv,
    density_from_mapping,
    growth_h,
    growth_profile,
    intersect_origin_ball,
    log_ball_at_origin,
    log_ball_offcenter,
)
from .specfun import (
    CapSpec,
    cap_area_bounds,
    cap_area_exact,
    gamma_ratio_bounds_hold,
    log_ball_volume,
    log_cap_fraction,
    log_gamma,
    log_sphere_area,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CapSpec",
    "ConeCapParams",
    "DecpResult",
    "DegenerateCapError",
    "DomainError",
    "DoublingResult",
    "EmptyTestFunctionError",
    "GeneralizedDecpResult",
    "GrowthProfile",
    "HypothesisReport",
    "HypothesisViolationError",
    "LebesgueBallResult",
    "LogValue",
    "NonSettlingTailError",
    "ONE",
    "OracleReport",
    "QuadraturePrecisionError",
    "RadialDensity",
    "ScanRow",
    "Segment",
    "T1_MAX",
    "U_SPLIT",
    "UndefinedGrowthError",
    "ZERO",
    "besicovitch_upper",
    "cap_area_bounds",
    "cap_area_exact",
    "cap_containment_params",
    "conjugate_exponent",
    "critical_p",
    "decp_analytic_floor",
    "decp_certificate",
    "decp_explicit_constant",
    "decp_generalized_certificate",
    "density_from_kv",
    "density_from_mapping",
    "doubling_cap_x2",
    "doubling_certificate",
    "empirical_weak_ratio",
    "gamma_ratio_bounds_hold",
    "growth_h",
    "growth_profile",
    "halfspace_masses",
    "intersect_origin_ball",
    "lebesgue_ball_certificate",
    "lemma_certificate",
    "log_ball_at_origin",
    "log_ball_offcenter",
    "log_ball_volume",
    "log_cap_fraction",
    "log_gamma",
    "log_sphere_area",
    "maximal_at_point",
    "optimize_v",
    "run_oracle",
    "sphere_ball_cap",
    "unit_ball_rate_base",
    "verify_level_set",
]
