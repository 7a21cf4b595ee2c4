"""Exact error-correction analysis of the [[5,1,3]] and [[7,1,3]] codes under
a Markov-correlated, optionally asymmetric Pauli channel."""

__version__ = "0.1.0"

from .channel import (
    SYMMETRIC,
    ChannelParams,
    EnumerationTooLarge,
    alphas_from_ratios,
    chain_probabilities,
    conditional_prob,
    distribution_csv,
    enumerate_distribution,
    index_sequences,
    joint_prob,
    single_prob,
    total_probability,
)
from .closed_forms import NoClosedForm, closed_form, has_closed_form, set_difference_identity
from .codes import (
    CODE_NAMES,
    CodeSpec,
    SyndromeCollisionError,
    build_code,
    detectability_check,
    is_in_stabilizer_group,
    make_code,
    recovery_for_syndrome,
    syndrome_of,
)
from .dense import (
    DenseState,
    build_codeword,
    check_kl_conditions,
    check_stabilizer_fixing,
    dense_pauli,
    printed_codeword,
)
from .fidelity import (
    FidelityReport,
    entanglement_fidelity_exact,
    fidelity,
    unencoded_fidelity,
)
from .pauli import PauliError, PauliString, multiply, symplectic_product, weight
from .threshold import (
    ASYMMETRIC_ALPHAS,
    ThresholdCurve,
    fidelity_sweep,
    is_effective,
    mu_threshold_curve,
    p_threshold_at_mu,
)

__all__ = [name for name in dir() if not name.startswith("_")]
