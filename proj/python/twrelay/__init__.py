"""Link-level simulation of correlated two-way relay schemes."""

from ._core import (
    CSV_HEADER,
    BlockCode,
    ChannelParams,
    CorrelationModel,
    Scheme,
    SweepPoint,
    analytic_sweep,
    bler_asymptotic,
    bler_exact,
    exact_bler_ratio,
    gain_rcpnc,
    gain_scpnc,
    make_bch,
    p_bpsk,
    p_pnc_exact,
    pnc_threshold,
    q_function,
    run_sweep,
    selftest,
    to_csv,
)

__all__ = [
    "CSV_HEADER",
    "BlockCode",
    "ChannelParams",
    "CorrelationModel",
    "Scheme",
    "SweepPoint",
    "analytic_sweep",
    "bler_asymptotic",
    "bler_exact",
    "exact_bler_ratio",
    "gain_rcpnc",
    "gain_scpnc",
    "make_bch",
    "p_bpsk",
    "p_pnc_exact",
    "pnc_threshold",
    "q_function",
    "run_sweep",
    "selftest",
    "to_csv",
]
