"""Classical simulation and verification of hidden-shift recovery on a dyadic grid."""

from .core import (
    DEFAULT_ENUM_CEILING,
    HiddenShift,
    OracleModel,
    Params,
    ResourceCeilingError,
    make_oracle,
    make_params,
    make_shift,
    window_1d,
    window_nd,
)
from .identities import (
    IdentityReport,
    binom,
    check_block,
    check_lowered_sum,
    check_total,
    inclusion_exclusion_block,
    lowered_sum_pair,
    total_count,
)
from .orthogonality import (
    CountReport,
    brute_count,
    gcd_count,
    iter_solutions,
    map_to_doubled,
    map_to_power_of_two,
    map_to_raised_exponent,
    max_orthogonal_count,
    solves,
)
from .pipeline import (
    RunConfig,
    SweepRow,
    read_samples,
    run_pipeline,
    run_sweep,
    write_samples,
)
from .recovery import (
    RecoveryReport,
    diseq_candidates,
    filter_signal_branch,
    finalize,
    log_likelihood,
    recover_shift,
    recover_shift_diseq,
)
from .simulator import (
    OutcomeDistribution,
    QuantumState,
    build_state,
    fourier_measure,
    is_zero_shift,
)
from .spectrum import Sample, conditional_mass, draw_samples, p_closed

__all__ = [
    "DEFAULT_ENUM_CEILING",
    "HiddenShift",
    "OracleModel",
    "Params",
    "ResourceCeilingError",
    "make_oracle",
    "make_params",
    "make_shift",
    "window_1d",
    "window_nd",
    "IdentityReport",
    "binom",
    "check_block",
    "check_lowered_sum",
    "check_total",
    "inclusion_exclusion_block",
    "lowered_sum_pair",
    "total_count",
    "CountReport",
    "brute_count",
    "gcd_count",
    "iter_solutions",
    "map_to_doubled",
    "map_to_power_of_two",
    "map_to_raised_exponent",
    "max_orthogonal_count",
    "solves",
    "RunConfig",
    "SweepRow",
    "read_samples",
    "run_pipeline",
    "run_sweep",
    "write_samples",
    "RecoveryReport",
    "diseq_candidates",
    "filter_signal_branch",
    "finalize",
    "log_likelihood",
    "recover_shift",
    "recover_shift_diseq",
    "OutcomeDistribution",
    "QuantumState",
    "build_state",
    "fourier_measure",
    "is_zero_shift",
    "Sample",
    "conditional_mass",
    "draw_samples",
    "p_closed",
]

__version__ = "0.1.0"
