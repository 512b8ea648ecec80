"""Arbitrary-precision laboratory for Laguerre zero asymptotics.

The package computes generalized Laguerre polynomials with arbitrary real
parameters, finds their contracted zeros with a simultaneous-iteration root
finder, traces the Szego level curves that attract those zeros, discretizes
the balayage measures living on the curves, and checks the potential-theoretic
identities that tie everything together.
"""

from .asymptotics import (
    AlphaSchedule,
    ConvergenceReport,
    ks_uniform_theta,
    level_median,
    make_schedule,
    origin_extremality,
    schedule_precision,
    supnorm_extremality,
    zero_distribution_report,
)
from .errors import (
    ComputationError,
    ConfigurationError,
    DegenerateParameter,
    InvalidParameter,
    InvalidSchedule,
    InvalidTestPoint,
    NonConvergence,
    PrecisionError,
    SingularEvaluation,
    SzegolabError,
    TraceError,
)
from .laguerre import (
    AskeyResult,
    CoeffList,
    LaguerreSpec,
    ParamDecomposition,
    askey_check,
    coefficients,
    evaluate,
    evaluate_at_zero,
    monic_rescaled,
    param_decomposition,
    recommended_precision,
)
from .measures import DiscreteMeasure, log_potential
from .potential import (
    DEFAULT_FIELD,
    BalayageCheck,
    BalayageReport,
    EnergyResult,
    ExternalField,
    LejaResult,
    discretize_mu_r,
    harmonic_moments,
    pullback_density,
    refined_moment,
    refined_potential,
    verify_balayage,
    weighted_energy,
    weighted_leja,
)
from .precision import (
    MIN_PRECISION_BITS,
    ap_complex,
    ap_real,
    check_precision,
    decimal_digits,
    default_precision,
    format_real,
    mantissa_bits,
    op_precision,
    workprec,
)
from .rootfinding import ZeroSet, contracted_zeros, counting_measure, find_roots
from .szego import (
    LevelCurve,
    RegionTag,
    locate,
    phi_map,
    real_crossings,
    trace_level_curve,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSchedule",
    "AskeyResult",
    "BalayageCheck",
    "BalayageReport",
    "CoeffList",
    "ComputationError",
    "ConfigurationError",
    "ConvergenceReport",
    "DEFAULT_FIELD",
    "DegenerateParameter",
    "DiscreteMeasure",
    "EnergyResult",
    "ExternalField",
    "InvalidParameter",
    "InvalidSchedule",
    "InvalidTestPoint",
    "LaguerreSpec",
    "LejaResult",
    "LevelCurve",
    "MIN_PRECISION_BITS",
    "NonConvergence",
    "ParamDecomposition",
    "PrecisionError",
    "RegionTag",
    "SingularEvaluation",
    "SzegolabError",
    "TraceError",
    "ZeroSet",
    "ap_complex",
    "ap_real",
    "askey_check",
    "check_precision",
    "coefficients",
    "contracted_zeros",
    "counting_measure",
    "decimal_digits",
    "default_precision",
    "discretize_mu_r",
    "evaluate",
    "evaluate_at_zero",
    "find_roots",
    "format_real",
    "harmonic_moments",
    "ks_uniform_theta",
    "level_median",
    "locate",
    "log_potential",
    "make_schedule",
    "mantissa_bits",
    "monic_rescaled",
    "op_precision",
    "origin_extremality",
    "param_decomposition",
    "phi_map",
    "pullback_density",
    "real_crossings",
    "recommended_precision",
    "refined_moment",
    "refined_potential",
    "schedule_precision",
    "supnorm_extremality",
    "trace_level_curve",
    "verify_balayage",
    "weighted_energy",
    "weighted_leja",
    "winding_number",
    "workprec",
    "zero_distribution_report",
]
