"""Discrete-variable protocols on the Fock engine: polarization Bell states
and their linear-optical discrimination, teleportation, entanglement-based and
measurement-device-independent key distribution, photon subtraction, dual-rail
gates, the Mach-Zehnder interferometer, and a single-photon random bit.

Detector naming for the Bell analyzer (one polarizing splitter per
beamsplitter output arm, four detectors): D1V and D4H watch the V/H outputs
fed by the first arm, D3V and D2H the V/H outputs fed by the second arm.
With that labeling the singlet fires {D1V, D2H} or {D3V, D4H} and the
H/V-swapped triplet fires {D1V, D4H} or {D3V, D2H}; all other patterns are
ambiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

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
    apply_phase,
    apply_pbs,
    fidelity,
    normalize,
    pol_pair,
    tensor,
)
from .measurement import photon_distribution, post_select, sample_counts

RECTILINEAR = "rectilinear"
DIAGONAL = "diagonal"

#: rectilinear -> diagonal basis change (H -> (H+V)/sqrt2, V -> (H-V)/sqrt2)
_QWP = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)

DETECTORS = ("D1V", "D2H", "D3V", "D4H")


class BellKind(Enum):
    PSI_PLUS = "PsiPlus"
    PSI_MINUS = "PsiMinus"
    PHI_PLUS = "PhiPlus"
    PHI_MINUS = "PhiMinus"


class BellClass(Enum):
    PHI_MINUS = "PhiMinus"
    PHI_PLUS = "PhiPlus"
    AMBIGUOUS = "Ambiguous"


@dataclass(frozen=True)
class BellOutcome:
    classification: BellClass
    signature: Mapping[str, int]  # fired detectors only


@dataclass(frozen=True)
class BellMeasurement:
    outcome: BellOutcome
    classification_probs: Mapping[BellClass, float]
    #: joint counts on (D1V, D2H, D3V, D4H) -> probability
    signature_probs: Mapping[tuple[int, int, int, int], float]


def bell_state(kind: BellKind, arms: tuple[int, int] = (0, 1), cutoff: int = DEFAULT_CUTOFF) -> FockState:
    """Polarization Bell state on two spatial arms, modes ordered
    (a_H, a_V, b_H, b_V).

    psi+- = (|HH> +- |VV>)/sqrt2 and phi+- = (|HV> +- |VH>)/sqrt2; phi- is
    the singlet.
    """
    modes = pol_pair(arms[0]) + pol_pair(arms[1])
    s = 1.0 / math.sqrt(2.0)
    if kind is BellKind.PSI_PLUS:
        terms = {(1, 0, 1, 0): s, (0, 1, 0, 1): s}
    elif kind is BellKind.PSI_MINUS:
        terms = {(1, 0, 1, 0): s, (0, 1, 0, 1): -s}
    elif kind is BellKind.PHI_PLUS:
        terms = {(1, 0, 0, 1): s, (0, 1, 1, 0): s}
    else:
        terms = {(1, 0, 0, 1): s, (0, 1, 1, 0): -s}
    return FockState(modes, terms, cutoff)


def _require_pol_arms(state: FockState, arms: tuple[int, int]) -> None:
    for arm in arms:
        for pol in (H, V):
            if Mode(arm, pol) not in state._pos:
                raise ValueError(f"state lacks mode {arm}{pol}; not a polarization pair state")


def bell_transform(state: FockState, arms: tuple[int, int] = (0, 1)) -> FockState:
    """Symmetric beamsplitter across the two arms, applied per polarization."""
    _require_pol_arms(state, arms)
    a, b = arms
    bs = BsParams(math.pi / 4)
    state = apply_beamsplitter(state, Mode(a, H), Mode(b, H), bs)
    state = apply_beamsplitter(state, Mode(a, V), Mode(b, V), bs)
    return state


def _route_through_pbs(state: FockState, arms: tuple[int, int]) -> tuple[FockState, dict[str, Mode], list[Mode]]:
    """Add a vacuum arm per analyzer output, send each arm through its
    polarizing splitter, and name the four detector modes.

    Returns (routed state, detector modes, modes that are vacuum after
    routing)."""
    a1, a2 = arms
    free = max(m.spatial for m in state.modes) + 1
    r1, r2 = free, free + 1
    extra = pol_pair(r1) + pol_pair(r2)
    widened = FockState(
        state.modes + extra,
        {occ + (0, 0, 0, 0): amp for occ, amp in state.terms.items()},
        state.cutoff,
        normalized=state.normalized,
    )
    routed = apply_pbs(widened, a1, r1)
    routed = apply_pbs(routed, a2, r2)
    detectors = {
        "D1V": Mode(r1, V),
        "D2H": Mode(a2, H),
        "D3V": Mode(r2, V),
        "D4H": Mode(a1, H),
    }
    dead = [Mode(a1, V), Mode(a2, V), Mode(r1, H), Mode(r2, H)]
    return routed, detectors, dead


def classify_signature(counts: tuple[int, int, int, int]) -> BellClass:
    """Map joint (D1V, D2H, D3V, D4H) counts to a Bell classification."""
    if counts in ((1, 1, 0, 0), (0, 0, 1, 1)):
        return BellClass.PHI_MINUS
    if counts in ((1, 0, 0, 1), (0, 1, 1, 0)):
        return BellClass.PHI_PLUS
    return BellClass.AMBIGUOUS


def bell_analysis(state: FockState, arms: tuple[int, int] = (0, 1)) -> tuple[
    dict[tuple[int, int, int, int], float], dict[BellClass, float]
]:
    """Exact detector statistics of the linear-optical Bell measurement:
    beamsplitter across the arms, a polarizing splitter per output, photon
    counting on the four detectors."""
    _require_pol_arms(state, arms)
    for occ in state.terms:
        if sum(occ) != 2:
            raise ValueError("Bell measurement expects exactly two photons")
    mixed = bell_transform(state, arms)
    routed, detectors, _ = _route_through_pbs(mixed, arms)
    dist = photon_distribution(routed, [detectors[d] for d in DETECTORS])
    class_probs = {c: 0.0 for c in BellClass}
    for counts, p in dist.items():
        class_probs[classify_signature(counts)] += p
    return dist, class_probs


def _sample_key(dist: Mapping[tuple, float], seed: int):
    u = np.random.default_rng(seed).random()
    acc = 0.0
    last = None
    for key in sorted(dist):
        acc += dist[key]
        last = key
        if u < acc:
            return key
    return last


def _outcome_from_counts(counts: tuple[int, int, int, int]) -> BellOutcome:
    fired = {d: n for d, n in zip(DETECTORS, counts) if n}
    return BellOutcome(classify_signature(counts), MappingProxyType(fired))


def bell_measure(state: FockState, arms: tuple[int, int] = (0, 1), seed: int = 0) -> BellMeasurement:
    """One seeded run of the linear-optical Bell measurement, together with
    the exact signature and classification probability tables."""
    dist, class_probs = bell_analysis(state, arms)
    counts = _sample_key(dist, seed)
    return BellMeasurement(
        outcome=_outcome_from_counts(counts),
        classification_probs=MappingProxyType(class_probs),
        signature_probs=MappingProxyType(dist),
    )


def pauli_z(state: FockState, arm: int) -> FockState:
    """Sign flip of the V component of a polarization qubit (waveplate Z)."""
    return apply_phase(state, Mode(arm, V), math.pi)


# --------------------------------------------------------------------------
# teleportation
# --------------------------------------------------------------------------

_IDENTITY = "identity"
_PAULI_Z = "pauli_z"


@dataclass(frozen=True)
class TeleportBranch:
    signature: tuple[int, int, int, int]
    probability: float
    classification: BellClass
    correction: str
    bob_state: FockState  # corrected and normalized
    fidelity: float


@dataclass(frozen=True)
class TeleportResult:
    outcome: BellOutcome
    correction: str
    bob_state: FockState
    success: bool
    fidelity: float
    success_probability: float


def _input_qubit(alpha: complex, beta: complex, arm: int, cutoff: int) -> FockState:
    return FockState(pol_pair(arm), {(1, 0): alpha, (0, 1): beta}, cutoff)


def teleport_branches(alpha: complex, beta: complex, cutoff: int = DEFAULT_CUTOFF) -> list[TeleportBranch]:
    """Exact branch-by-branch analysis of single-qubit teleportation.

    The qubit alpha|H> + beta|V> on arm 0 and the sender's half (arm 1) of a
    shared singlet meet on a symmetric beamsplitter; the Bell analyzer's
    detector signature decides the correction on the receiver's arm 2:
    identity for the singlet signature, Z for the swapped-triplet signature.
    Only those two signatures are unambiguous, so half the branches succeed.
    """
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-12:
        raise ValueError("input qubit amplitudes must be normalized")
    qubit = _input_qubit(alpha, beta, 0, cutoff)
    joint = tensor(qubit, bell_state(BellKind.PHI_MINUS, arms=(1, 2), cutoff=cutoff))
    bs = BsParams(math.pi / 4)
    joint = apply_beamsplitter(joint, Mode(0, H), Mode(1, H), bs)
    joint = apply_beamsplitter(joint, Mode(0, V), Mode(1, V), bs)
    routed, detectors, dead = _route_through_pbs(joint, (0, 1))
    det_modes = [detectors[d] for d in DETECTORS]
    dist = photon_distribution(routed, det_modes)
    reference = _input_qubit(alpha, beta, 2, cutoff)
    branches = []
    for counts in sorted(dist):
        pattern = {m: n for m, n in zip(det_modes, counts)}
        pattern.update({m: 0 for m in dead})
        bob, prob = post_select(routed, pattern)
        if prob <= 0.0:
            continue
        cls = classify_signature(counts)
        correction = _PAULI_Z if cls is BellClass.PHI_PLUS else _IDENTITY
        if correction == _PAULI_Z:
            bob = pauli_z(bob, 2)
        branches.append(
            TeleportBranch(
                signature=counts,
                probability=prob,
                classification=cls,
                correction=correction if cls is not BellClass.AMBIGUOUS else _IDENTITY,
                bob_state=bob,
                fidelity=fidelity(bob, reference),
            )
        )
    return branches


def teleport_dv(alpha: complex, beta: complex, seed: int = 0, cutoff: int = DEFAULT_CUTOFF) -> TeleportResult:
    """One seeded teleportation round: sample a detector signature, apply the
    signature's correction, and report the receiver's state."""
    branches = teleport_branches(alpha, beta, cutoff)
    table = {b.signature: b.probability for b in branches}
    counts = _sample_key(table, seed)
    chosen = next(b for b in branches if b.signature == counts)
    success = chosen.classification is not BellClass.AMBIGUOUS
    success_probability = sum(
        b.probability for b in branches if b.classification is not BellClass.AMBIGUOUS
    )
    return TeleportResult(
        outcome=_outcome_from_counts(counts),
        correction=chosen.correction,
        bob_state=chosen.bob_state,
        success=success,
        fidelity=chosen.fidelity,
        success_probability=success_probability,
    )


# --------------------------------------------------------------------------
# entanglement-based key distribution
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class QkdRound:
    alice_bit: int | None
    bob_bit: int | None
    alice_basis: str
    bob_basis: str
    kept: bool


# spatial arms: 0 = A (Alice, rectilinear), 1 = B (Bob, rectilinear),
#               2 = X (Alice, diagonal),    3 = Y (Bob, diagonal)
_ARM_A, _ARM_B, _ARM_X, _ARM_Y = 0, 1, 2, 3


def qkd_state(cutoff: int = DEFAULT_CUTOFF) -> FockState:
    """The shared state right before detection: |psi+> split on one
    beamsplitter per party, then a quarter-wave plate rotates the reflected
    arms X and Y into the diagonal basis.

    Each splitter sends its input arm to the transmitted slot (A or B) and a
    fresh vacuum arm to the reflected slot (X or Y); this ordering fixes the
    amplitude pattern of the eight-mode state and is covered by tests.
    """
    pair = bell_state(BellKind.PSI_PLUS, arms=(_ARM_A, _ARM_B), cutoff=cutoff)
    extra = pol_pair(_ARM_X) + pol_pair(_ARM_Y)
    st = FockState(
        pair.modes + extra,
        {occ + (0, 0, 0, 0): amp for occ, amp in pair.terms.items()},
        cutoff,
    )
    bs = BsParams(math.pi / 4)
    for pol in (H, V):
        st = apply_beamsplitter(st, Mode(_ARM_A, pol), Mode(_ARM_X, pol), bs)
        st = apply_beamsplitter(st, Mode(_ARM_B, pol), Mode(_ARM_Y, pol), bs)
    st = apply_mode_unitary(st, Mode(_ARM_X, H), Mode(_ARM_X, V), _QWP)
    st = apply_mode_unitary(st, Mode(_ARM_Y, H), Mode(_ARM_Y, V), _QWP)
    return st


def _qkd_record(counts: tuple[int, ...], modes: Sequence[Mode]) -> QkdRound:
    """Interpret one joint detection pattern.

    Bit encoding at the detectors: H-labeled click = 0, V-labeled click = 1
    (on X/Y the wave plate has already mapped the diagonal basis onto H/V).
    A round is kept only when both photons exited matching-basis arms.
    """
    alice_arm = alice_bit = bob_arm = bob_bit = None
    for n, m in zip(counts, modes):
        if n == 0:
            continue
        if m.spatial in (_ARM_A, _ARM_X):
            alice_arm, alice_bit = m.spatial, (0 if m.pol == H else 1)
        else:
            bob_arm, bob_bit = m.spatial, (0 if m.pol == H else 1)
    alice_basis = RECTILINEAR if alice_arm == _ARM_A else DIAGONAL
    bob_basis = RECTILINEAR if bob_arm == _ARM_B else DIAGONAL
    kept = alice_basis == bob_basis
    return QkdRound(
        alice_bit=alice_bit if kept else None,
        bob_bit=bob_bit if kept else None,
        alice_basis=alice_basis,
        bob_basis=bob_basis,
        kept=kept,
    )


def qkd_branches(cutoff: int = DEFAULT_CUTOFF) -> list[tuple[QkdRound, float]]:
    """Exhaustive detection branches of one entangled key-distribution round."""
    st = qkd_state(cutoff)
    dist = photon_distribution(st, st.modes)
    return [(_qkd_record(counts, st.modes), p) for counts, p in dist.items()]


def qkd_round(seed: int, cutoff: int = DEFAULT_CUTOFF) -> QkdRound:
    """One seeded entangled key-distribution round."""
    st = qkd_state(cutoff)
    counts = sample_counts(st, st.modes, seed)
    return _qkd_record(counts, st.modes)


# --------------------------------------------------------------------------
# measurement-device-independent key distribution
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MdiRound:
    outcome: BellClass
    kept: bool
    alice_bit: int | None
    bob_bit: int | None  # after the sifting flips


#: kept-round relation between the raw prepared bits, by (basis, outcome).
#: Regenerated from exhaustive Bell analysis by mdi_bit_relation_table().
MDI_BIT_RELATION: dict[tuple[str, BellClass], str] = {
    (RECTILINEAR, BellClass.PHI_MINUS): "anti",
    (RECTILINEAR, BellClass.PHI_PLUS): "anti",
    (DIAGONAL, BellClass.PHI_MINUS): "anti",
    (DIAGONAL, BellClass.PHI_PLUS): "parallel",
}


def polarization_qubit(arm: int, basis: str, bit: int, cutoff: int = DEFAULT_CUTOFF) -> FockState:
    """Single photon encoding one bit: H/V in the rectilinear basis,
    (H+V)/sqrt2 and (H-V)/sqrt2 in the diagonal basis."""
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    if basis == RECTILINEAR:
        occ = (1, 0) if bit == 0 else (0, 1)
        return FockState(pol_pair(arm), {occ: 1.0}, cutoff)
    if basis == DIAGONAL:
        s = 1.0 / math.sqrt(2.0)
        return FockState(pol_pair(arm), {(1, 0): s, (0, 1): s if bit == 0 else -s}, cutoff)
    raise ValueError(f"unknown basis {basis!r}")


def mdi_qkd_round(
    alice: tuple[str, int], bob: tuple[str, int], seed: int = 0, cutoff: int = DEFAULT_CUTOFF
) -> MdiRound:
    """One measurement-device-independent round: the untrusted midpoint Bell
    measures the two prepared photons and announces the outcome.

    Rounds are kept when the outcome is unambiguous and the bases match.
    Bob flips every kept bit, plus one more flip on diagonal-basis rounds
    announced as the swapped triplet (see MDI_BIT_RELATION); after the flips
    kept bits always agree on an ideal channel.
    """
    (a_basis, a_bit), (b_basis, b_bit) = alice, bob
    st = tensor(
        polarization_qubit(0, a_basis, a_bit, cutoff),
        polarization_qubit(1, b_basis, b_bit, cutoff),
    )
    meas = bell_measure(st, (0, 1), seed)
    cls = meas.outcome.classification
    kept = cls is not BellClass.AMBIGUOUS and a_basis == b_basis
    if not kept:
        return MdiRound(outcome=cls, kept=False, alice_bit=None, bob_bit=None)
    flips = 1 + (1 if MDI_BIT_RELATION[(a_basis, cls)] == "parallel" else 0)
    return MdiRound(outcome=cls, kept=True, alice_bit=a_bit, bob_bit=(b_bit + flips) % 2)


def mdi_bit_relation_table() -> dict[tuple[str, BellClass], str]:
    """Regenerate MDI_BIT_RELATION by exhaustive Bell analysis of all sixteen
    matched- and crossed-basis preparations."""
    table: dict[tuple[str, BellClass], str] = {}
    for basis in (RECTILINEAR, DIAGONAL):
        for a_bit in (0, 1):
            for b_bit in (0, 1):
                st = tensor(
                    polarization_qubit(0, basis, a_bit),
                    polarization_qubit(1, basis, b_bit),
                )
                _, class_probs = bell_analysis(st, (0, 1))
                for cls in (BellClass.PHI_MINUS, BellClass.PHI_PLUS):
                    if class_probs[cls] <= 1e-12:
                        continue
                    relation = "parallel" if a_bit == b_bit else "anti"
                    previous = table.setdefault((basis, cls), relation)
                    if previous != relation:
                        raise AssertionError(
                            f"inconsistent bit relation for {basis}/{cls}"
                        )
    return table


# --------------------------------------------------------------------------
# photon subtraction
# --------------------------------------------------------------------------


def photon_subtract(state: FockState, theta: float) -> tuple[FockState, float]:
    """Heralded single-photon subtraction: mix the input with a vacuum
    ancilla on a weakly reflecting splitter and keep the branch with exactly
    one ancilla photon.

    Exact at every order in theta; as theta -> 0 the conditional state tends
    to the normalized action of the annihilation operator.
    """
    if len(state.modes) != 1:
        raise ValueError("photon subtraction acts on single-mode states")
    if not state.normalized:
        raise ValueError("photon subtraction requires a normalized input")
    if not 0.0 < theta < math.pi / 2:
        raise ValueError("theta must lie strictly between 0 and pi/2")
    m = state.modes[0]
    anc = Mode(m.spatial + 1, m.pol)
    joint = FockState((m, anc), {occ + (0,): amp for occ, amp in state.terms.items()}, state.cutoff)
    joint = apply_beamsplitter(joint, m, anc, BsParams(theta))
    cond, prob = post_select(joint, {anc: 1})
    if prob <= 0.0:
        raise ValueError("zero-probability herald: the input has no photons to subtract")
    return cond, prob


def subtracted_reference(state: FockState) -> FockState:
    """normalize(a|state>), the ideal weak-splitter limit of subtraction."""
    lowered = annihilation(state, state.modes[0])
    return normalize(lowered)[0]


# --------------------------------------------------------------------------
# dual-rail gates, interferometer, random bit
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DualRailQubit:
    """Logical qubit carried by one photon across two rails:
    |1,0> is logical 0, |0,1> is logical 1."""

    state: FockState

    def __post_init__(self) -> None:
        if len(self.state.modes) != 2:
            raise ValueError("a dual-rail qubit lives on exactly two modes")
        for occ in self.state.terms:
            if sum(occ) != 1:
                raise ValueError("every term of a dual-rail qubit carries exactly one photon")

    @property
    def rails(self) -> tuple[Mode, Mode]:
        return self.state.modes  # type: ignore[return-value]

    def amplitudes(self) -> tuple[complex, complex]:
        return self.state.amplitude((1, 0)), self.state.amplitude((0, 1))


def dual_rail(
    alpha: complex = 1.0,
    beta: complex = 0.0,
    arms: tuple[int, int] = (0, 1),
    cutoff: int = DEFAULT_CUTOFF,
) -> DualRailQubit:
    state = FockState(
        (Mode(arms[0]), Mode(arms[1])), {(1, 0): alpha, (0, 1): beta}, cutoff
    )
    return DualRailQubit(state)


def apply_hadamard(state: FockState, rail0: Mode, rail1: Mode) -> FockState:
    """Hadamard on a dual-rail pair: a -pi/2 phase on rail 1 before and after
    a symmetric beamsplitter.  The induced 2x2 matrix is exactly
    [[1, 1], [1, -1]]/sqrt2, with no residual global phase."""
    state = apply_phase(state, rail1, -math.pi / 2)
    state = apply_beamsplitter(state, rail0, rail1, BsParams(math.pi / 4))
    state = apply_phase(state, rail1, -math.pi / 2)
    return state


def hadamard_dualrail(q: DualRailQubit) -> DualRailQubit:
    r0, r1 = q.rails
    return DualRailQubit(apply_hadamard(q.state, r0, r1))


def _controlled_pi(state: FockState, m1: Mode, m2: Mode) -> FockState:
    """Exact controlled-pi phase: -1 on terms where m1 and m2 jointly hold
    one photon each."""
    i, j = state.index_of(m1), state.index_of(m2)
    out = {
        occ: (-amp if occ[i] == 1 and occ[j] == 1 else amp)
        for occ, amp in state.terms.items()
    }
    return FockState(state.modes, out, state.cutoff, normalized=state.normalized)


def apply_cnot(
    state: FockState,
    control: tuple[Mode, Mode],
    target: tuple[Mode, Mode],
) -> FockState:
    """CNOT on dual-rail qubits: the target rails enter a 50:50 splitter, a
    controlled-pi phase couples the control's one-rail to the internal rail
    that returns to the target's zero-rail, and an inverted 50:50 splitter
    closes the interferometer.

    Both splitters use the real mixing convention (reflection phase 0); with
    the i-reflection convention no placement of the conditional phase closes
    to CNOT within a single global phase.  The induced computational-basis
    matrix here is exactly CNOT.
    """
    c0, c1 = control
    t0, t1 = target
    if len({c0, c1, t0, t1}) != 4:
        raise ValueError("control and target rails must be four distinct modes")
    state = apply_beamsplitter(state, t0, t1, BsParams(math.pi / 4, 0.0))
    state = _controlled_pi(state, c1, t0)
    state = apply_beamsplitter(state, t0, t1, BsParams(-math.pi / 4, 0.0))
    return state


def cnot_dualrail(control: DualRailQubit, target: DualRailQubit) -> FockState:
    """CNOT applied to two freshly prepared qubits; returns the joint
    four-mode state (which is generally entangled)."""
    joint = tensor(control.state, target.state)
    return apply_cnot(joint, control.rails, target.rails)


def mzi(theta: float, cutoff: int = DEFAULT_CUTOFF) -> FockState:
    """Mach-Zehnder interferometer on one photon: splitter, a mirror on each
    internal rail (phase i per photon), then an identical splitter.

    Output is i*(cos(2 theta)|0>_L + i sin(2 theta)|1>_L); the symmetric
    splitter (theta = pi/4) returns -|1>_L.
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError("theta must lie in [0, pi/2]")
    r0, r1 = Mode(0), Mode(1)
    st = FockState((r0, r1), {(1, 0): 1.0}, cutoff)
    st = apply_beamsplitter(st, r0, r1, BsParams(theta))
    st = apply_phase(st, r0, math.pi / 2)
    st = apply_phase(st, r1, math.pi / 2)
    st = apply_beamsplitter(st, r0, r1, BsParams(theta))
    return st


def rng_bit(seed: int) -> int:
    """Intrinsically random bit: one photon on a symmetric splitter, bit =
    which detector fired."""
    st = FockState((Mode(0), Mode(1)), {(1, 0): 1.0}, cutoff=2)
    st = apply_beamsplitter(st, Mode(0), Mode(1), BsParams(math.pi / 4))
    counts = sample_counts(st, st.modes, seed)
    return 0 if counts[0] == 1 else 1
