"""Cooperative NOMA downlink simulator and analytical toolkit.

The heavy lifting lives in the compiled `_core` extension; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BoundMode,
    BracketError,
    CapacityEstimate,
    CapacityParams,
    CellEstimate,
    ChannelRealization,
    CooperationMode,
    DecodeOutcome,
    ExperimentFile,
    GridSpec,
    OutageBoundReport,
    OutageEstimate,
    OutageFloorError,
    PairingCandidate,
    PairingParams,
    PairingReport,
    ParseError,
    RelayBehavior,
    Scheme,
    SchemePointEstimate,
    SweepSpec,
    SystemConfig,
    WilsonInterval,
    ZSpec,
    capacity_csv,
    db_to_linear,
    diversity_slope,
    evaluate_decode,
    gamma_order_cdf,
    gap_high_snr,
    linear_to_db,
    ordered_gain_cdf_exact,
    outage_csv,
    outage_union_bound,
    overall_outage,
    pair_rates_noma,
    pair_rates_tdma,
    pairing_csv,
    pairing_study,
    parse_experiment_text,
    render_experiment_file,
    run_bound_validation,
    run_capacity_search,
    run_outage_sweep,
    sample_realization,
    scheme_name,
    snr_cooperative,
    snr_direct,
    sum_rate_gap_exact,
    wilson_interval,
    z_cdf,
    z_cdf_high_snr,
)

__version__ = "0.1.0"
