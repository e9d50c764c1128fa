"""Two-engine simulator for beamsplitter-centric quantum information:
an exact sparse Fock-space engine with discrete-variable protocols, and a
Gaussian covariance-matrix engine for the continuous-variable ones."""

from .fock import (
    BsParams,
    DEFAULT_CUTOFF,
    FockState,
    H,
    Mode,
    V,
    annihilation,
    apply_beamsplitter,
    apply_mode_unitary,
    apply_pbs,
    apply_phase,
    bs_mode_matrix,
    coherent_state,
    creation,
    fidelity,
    inner_product,
    normalize,
    number_state,
    pol_pair,
    tensor,
)
from .measurement import (
    expect_number,
    g2_zero,
    homodyne_mean,
    photon_distribution,
    post_select,
    sample_counts,
)
from .dv import (
    BellClass,
    BellKind,
    BellMeasurement,
    BellOutcome,
    DualRailQubit,
    MdiRound,
    QkdRound,
    TeleportResult,
    apply_cnot,
    apply_hadamard,
    bell_analysis,
    bell_measure,
    bell_state,
    bell_transform,
    cnot_dualrail,
    dual_rail,
    hadamard_dualrail,
    mdi_qkd_round,
    mzi,
    pauli_z,
    photon_subtract,
    polarization_qubit,
    qkd_round,
    rng_bit,
    teleport_dv,
)
from .gaussian import (
    CvQkdRound,
    CvTeleportStats,
    GaussianState,
    Quadrature,
    apply_symplectic,
    cv_qkd_round,
    cv_teleport_cov,
    cv_teleport_mc,
    epr_from_squeezed,
    homodyne_condition,
    is_physical,
    is_symplectic,
    omega,
    squeeze_channel,
    symplectic_bs,
    symplectic_phase,
    symplectic_squeeze,
    tmsv,
    vacuum_state,
)

__version__ = "0.1.0"
