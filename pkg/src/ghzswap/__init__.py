"""Entanglement swapping for Bell and GHZ states in qubit registers.

Closed-form outcome tables for joint GHZ measurements on the leading halves
of half-symmetric states, a dense state-vector oracle that verifies them by
brute force, and seeded simulations of three protocols built on the swap
rules (key distribution, private comparison, secret sharing).
"""

from .labels import (
    PLUS,
    MINUS,
    PHI_PLUS,
    PHI_MINUS,
    PSI_PLUS,
    PSI_MINUS,
    CompositeSystem,
    GhzLabel,
    HalfRelation,
    HalfSymmetricLabel,
    classify_halves,
    enumerate_basis,
    enumerate_half_symmetric,
    ghz_index,
    make_label,
    negate_bits,
    parse_label,
)
from .dense import (
    MAX_QUBITS,
    DenseState,
    MeasurementOutcome,
    ResourceLimitError,
    computational,
    embed,
    ghz_overlaps,
    match_label,
    measure_ghz,
    measure_qubit,
    permute,
    tensor,
)
from .swap import (
    ClosedFormUnavailable,
    SwapPair,
    SwapPrediction,
    SwapSpec,
    VerificationReport,
    multi_swap_outcomes_match,
    oracle_swap_pairs,
    predict_multi,
    predict_two_bell,
    predict_two_ghz,
    swap_outcomes_match,
    verify_against_oracle,
)
from .protocols import (
    CLEAN,
    Channel,
    DecoyConfig,
    DecoyStats,
    InterceptMeasure,
    ProtocolTranscript,
    decoy_check,
    normalize_shared_bits,
    qkd_session,
    qpc_session,
    qss_session,
)

__version__ = "0.1.0"

__all__ = [
    "PLUS",
    "MINUS",
    "PHI_PLUS",
    "PHI_MINUS",
    "PSI_PLUS",
    "PSI_MINUS",
    "CompositeSystem",
    "GhzLabel",
    "HalfRelation",
    "HalfSymmetricLabel",
    "classify_halves",
    "enumerate_basis",
    "enumerate_half_symmetric",
    "ghz_index",
    "make_label",
    "negate_bits",
    "parse_label",
    "MAX_QUBITS",
    "DenseState",
    "MeasurementOutcome",
    "ResourceLimitError",
    "computational",
    "embed",
    "ghz_overlaps",
    "match_label",
    "measure_ghz",
    "measure_qubit",
    "permute",
    "tensor",
    "ClosedFormUnavailable",
    "SwapPair",
    "SwapPrediction",
    "SwapSpec",
    "VerificationReport",
    "multi_swap_outcomes_match",
    "oracle_swap_pairs",
    "predict_multi",
    "predict_two_bell",
    "predict_two_ghz",
    "swap_outcomes_match",
    "verify_against_oracle",
    "CLEAN",
    "Channel",
    "DecoyConfig",
    "DecoyStats",
    "InterceptMeasure",
    "ProtocolTranscript",
    "decoy_check",
    "normalize_shared_bits",
    "qkd_session",
    "qpc_session",
    "qss_session",
]
