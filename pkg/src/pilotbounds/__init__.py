"""Spectral-efficiency bounds for pilot-assisted block-fading channels.

Closed-form capacity and mutual-information bounds (perfect-CSI,
separate processing, joint processing), pilot-count optimization,
asymptotic power offsets, the MIMO generalizations, and a Monte Carlo
harness that cross-checks every closed form against an independent
sampler.
"""

from .expint import (
    ScaledExpIntResult,
    eps1_array,
    expint_e1,
    expint_quadrature_oracle,
    expint_scaled,
    expint_scaled_sum,
)
from .mimo import (
    GramCheckRow,
    GramOptimalityReport,
    MimoPilotSearch,
    MimoSeparateResult,
    capacity_ctr,
    mimo_joint_j1,
    mimo_joint_j2,
    mimo_optimize_pilots,
    mimo_power_advantage_asymptotic,
    mimo_separate,
    pilot_gram_optimality_check,
)
from .montecarlo import (
    Estimate,
    McConfig,
    derive_stream,
    sample_capacity_siso,
    sample_ctr,
    sample_delta_mimo,
    sample_penalty_term,
)
from .params import (
    DB_PER_UNIT,
    MimoParams,
    PowerOffset,
    SisoParams,
    SnrValue,
    linear_snr,
)
from .siso import (
    PilotSearch,
    SeparateBound,
    TrueCapacityGap,
    advantage_units,
    asymptote_j1,
    asymptote_j2,
    capacity_csi,
    joint_bound_j1,
    joint_bound_j2,
    low_power_expansion_check,
    mmse_estimate_variance,
    optimize_pilots_joint,
    power_advantage_asymptotic,
    power_advantage_at_snr,
    separate_bound,
    single_pilot_advantage,
    snr_effective,
    true_capacity_gap,
)
from .sweeps import (
    SweepSpec,
    SweepTable,
    ValidationCell,
    ValidationReport,
    convergence_table,
    sweep_fig1,
    sweep_fig2,
    validate_all,
)

__version__ = "0.1.0"

__all__ = [
    "DB_PER_UNIT",
    "Estimate",
    "GramCheckRow",
    "GramOptimalityReport",
    "McConfig",
    "MimoParams",
    "MimoPilotSearch",
    "MimoSeparateResult",
    "PilotSearch",
    "PowerOffset",
    "ScaledExpIntResult",
    "SeparateBound",
    "SisoParams",
    "SnrValue",
    "SweepSpec",
    "SweepTable",
    "TrueCapacityGap",
    "ValidationCell",
    "ValidationReport",
    "advantage_units",
    "asymptote_j1",
    "asymptote_j2",
    "capacity_csi",
    "capacity_ctr",
    "convergence_table",
    "derive_stream",
    "eps1_array",
    "expint_e1",
    "expint_quadrature_oracle",
    "expint_scaled",
    "expint_scaled_sum",
    "joint_bound_j1",
    "joint_bound_j2",
    "linear_snr",
    "low_power_expansion_check",
    "mimo_joint_j1",
    "mimo_joint_j2",
    "mimo_optimize_pilots",
    "mimo_power_advantage_asymptotic",
    "mimo_separate",
    "mmse_estimate_variance",
    "optimize_pilots_joint",
    "pilot_gram_optimality_check",
    "power_advantage_asymptotic",
    "power_advantage_at_snr",
    "sample_capacity_siso",
    "sample_ctr",
    "sample_delta_mimo",
    "sample_penalty_term",
    "separate_bound",
    "single_pilot_advantage",
    "snr_effective",
    "sweep_fig1",
    "sweep_fig2",
    "true_capacity_gap",
    "validate_all",
]
