import math

import numpy as np
import pytest
from scipy.stats import chi2

from bsim import (
    BellClass,
    BellKind,
    BsParams,
    FockState,
    Mode,
    apply_beamsplitter,
    apply_cnot,
    apply_phase,
    bell_analysis,
    bell_measure,
    bell_state,
    bell_transform,
    bs_mode_matrix,
    cnot_dualrail,
    dual_rail,
    fidelity,
    hadamard_dualrail,
    mdi_qkd_round,
    mzi,
    number_state,
    pauli_z,
    photon_distribution,
    photon_subtract,
    pol_pair,
    polarization_qubit,
    qkd_round,
    rng_bit,
    tensor,
    teleport_dv,
)
from bsim.dv import (
    DIAGONAL,
    MDI_BIT_RELATION,
    RECTILINEAR,
    mdi_bit_relation_table,
    qkd_branches,
    subtracted_reference,
    teleport_branches,
)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


class TestBellStates:
    def test_psi_plus_amplitudes(self):
        st = bell_state(BellKind.PSI_PLUS)
        assert st.amplitude((1, 0, 1, 0)) == pytest.approx(INV_SQRT2, abs=1e-15)
        assert st.amplitude((0, 1, 0, 1)) == pytest.approx(INV_SQRT2, abs=1e-15)

    def test_normalized(self):
        for kind in BellKind:
            assert bell_state(kind).norm() == pytest.approx(1.0, abs=1e-12)

    def test_orthonormality(self):
        for k1 in BellKind:
            for k2 in BellKind:
                f = fidelity(bell_state(k1), bell_state(k2))
                assert f == pytest.approx(1.0 if k1 is k2 else 0.0, abs=1e-12)


class TestBellTransform:
    def test_psi_states_bunch_into_same_polarization(self):
        for kind, sign in ((BellKind.PSI_PLUS, 1.0), (BellKind.PSI_MINUS, -1.0)):
            out = bell_transform(bell_state(kind))
            half_i = 0.5j
            assert out.amplitude((2, 0, 0, 0)) == pytest.approx(half_i, abs=1e-12)
            assert out.amplitude((0, 0, 2, 0)) == pytest.approx(half_i, abs=1e-12)
            assert out.amplitude((0, 2, 0, 0)) == pytest.approx(sign * half_i, abs=1e-12)
            assert out.amplitude((0, 0, 0, 2)) == pytest.approx(sign * half_i, abs=1e-12)
            assert len(out.terms) == 4

    def test_phi_plus_bunches_into_orthogonal_polarizations(self):
        out = bell_transform(bell_state(BellKind.PHI_PLUS))
        assert out.amplitude((1, 1, 0, 0)) == pytest.approx(1j * INV_SQRT2, abs=1e-12)
        assert out.amplitude((0, 0, 1, 1)) == pytest.approx(1j * INV_SQRT2, abs=1e-12)
        assert len(out.terms) == 2

    def test_singlet_is_invariant(self):
        out = bell_transform(bell_state(BellKind.PHI_MINUS))
        assert out.amplitude((1, 0, 0, 1)) == pytest.approx(INV_SQRT2, abs=1e-12)
        assert out.amplitude((0, 1, 1, 0)) == pytest.approx(-INV_SQRT2, abs=1e-12)
        assert len(out.terms) == 2

    def test_wrong_mode_structure_rejected(self):
        st = FockState((Mode(0), Mode(1)), {(1, 1): 1.0})
        with pytest.raises(ValueError):
            bell_transform(st)


class TestBellMeasurement:
    def test_confusion_matrix_is_exact(self):
        expected = {
            BellKind.PHI_MINUS: BellClass.PHI_MINUS,
            BellKind.PHI_PLUS: BellClass.PHI_PLUS,
            BellKind.PSI_PLUS: BellClass.AMBIGUOUS,
            BellKind.PSI_MINUS: BellClass.AMBIGUOUS,
        }
        for kind, target in expected.items():
            _, probs = bell_analysis(bell_state(kind))
            for cls in BellClass:
                want = 1.0 if cls is target else 0.0
                assert probs[cls] == pytest.approx(want, abs=1e-12), (kind, cls)

    def test_singlet_detector_signatures(self):
        dist, _ = bell_analysis(bell_state(BellKind.PHI_MINUS))
        # one photon each at D1V and D2H, or each at D3V and D4H
        assert dist[(1, 1, 0, 0)] == pytest.approx(0.5, abs=1e-12)
        assert dist[(0, 0, 1, 1)] == pytest.approx(0.5, abs=1e-12)
        assert set(dist) == {(1, 1, 0, 0), (0, 0, 1, 1)}

    def test_phi_plus_detector_signatures(self):
        dist, _ = bell_analysis(bell_state(BellKind.PHI_PLUS))
        # one photon each at D1V and D4H, or each at D3V and D2H
        assert dist[(1, 0, 0, 1)] == pytest.approx(0.5, abs=1e-12)
        assert dist[(0, 1, 1, 0)] == pytest.approx(0.5, abs=1e-12)
        assert set(dist) == {(1, 0, 0, 1), (0, 1, 1, 0)}

    def test_sampled_outcome_carries_signature(self):
        meas = bell_measure(bell_state(BellKind.PHI_MINUS), seed=5)
        assert meas.outcome.classification is BellClass.PHI_MINUS
        assert meas.outcome.signature in ({"D1V": 1, "D2H": 1}, {"D3V": 1, "D4H": 1})

    def test_photon_number_must_be_two(self):
        st = FockState(pol_pair(0) + pol_pair(1), {(1, 0, 0, 0): 1.0})
        with pytest.raises(ValueError):
            bell_analysis(st)


class TestPauliZ:
    def test_action_and_involution(self):
        h_state = polarization_qubit(0, RECTILINEAR, 0)
        v_state = polarization_qubit(0, RECTILINEAR, 1)
        assert pauli_z(h_state, 0).amplitude((1, 0)) == pytest.approx(1.0, abs=1e-12)
        assert pauli_z(v_state, 0).amplitude((0, 1)) == pytest.approx(-1.0, abs=1e-12)
        twice = pauli_z(pauli_z(v_state, 0), 0)
        assert twice.amplitude((0, 1)) == pytest.approx(1.0, abs=1e-12)


class TestTeleport:
    def test_success_probability_is_half(self):
        branches = teleport_branches(0.6, 0.8j)
        p = sum(b.probability for b in branches if b.classification is not BellClass.AMBIGUOUS)
        assert p == pytest.approx(0.5, abs=1e-12)

    def test_singlet_branch_needs_no_correction(self):
        alpha, beta = 0.6, 0.8j
        reference = FockState(pol_pair(2), {(1, 0): alpha, (0, 1): beta})
        for b in teleport_branches(alpha, beta):
            if b.classification is BellClass.PHI_MINUS:
                assert b.correction == "identity"
                assert fidelity(b.bob_state, reference) == pytest.approx(1.0, abs=1e-12)

    def test_phi_plus_branch_holds_z_flipped_qubit(self):
        alpha, beta = 0.6, 0.8j
        flipped = FockState(pol_pair(2), {(1, 0): alpha, (0, 1): -beta})
        for b in teleport_branches(alpha, beta):
            if b.classification is BellClass.PHI_PLUS:
                assert b.correction == "pauli_z"
                # undo the correction to inspect the raw branch state
                raw = pauli_z(b.bob_state, 2)
                assert fidelity(raw, flipped) == pytest.approx(1.0, abs=1e-12)

    def test_random_qubits_teleport_faithfully(self):
        rng = np.random.default_rng(101)
        for _ in range(100):
            a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
            norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
            a, b = a / norm, b / norm
            for branch in teleport_branches(a, b):
                if branch.classification is not BellClass.AMBIGUOUS:
                    assert branch.fidelity == pytest.approx(1.0, abs=1e-12)

    def test_basis_state_arrives_deterministically(self):
        res = teleport_dv(1.0, 0.0, seed=12)
        if res.success:
            dist = photon_distribution(res.bob_state, res.bob_state.modes)
            assert dist[(1, 0)] == pytest.approx(1.0, abs=1e-12)

    def test_sampled_round_statistics(self):
        successes = sum(teleport_dv(INV_SQRT2, 1j * INV_SQRT2, seed=s).success for s in range(400))
        assert 0.4 <= successes / 400 <= 0.6

    def test_unnormalized_input_rejected(self):
        with pytest.raises(ValueError):
            teleport_branches(1.0, 1.0)


class TestQkd:
    def test_pre_waveplate_amplitudes(self):
        # |psi+> after each party's splitter, before the basis rotation:
        # transmitted slots A, B keep the input arm labels; reflected slots
        # X, Y are the fresh arms.
        pair = bell_state(BellKind.PSI_PLUS, arms=(0, 1))
        extra = pol_pair(2) + pol_pair(3)
        st = FockState(
            pair.modes + extra,
            {occ + (0, 0, 0, 0): amp for occ, amp in pair.terms.items()},
            pair.cutoff,
        )
        bs = BsParams(math.pi / 4)
        for pol in ("H", "V"):
            st = apply_beamsplitter(st, Mode(0, pol), Mode(2, pol), bs)
            st = apply_beamsplitter(st, Mode(1, pol), Mode(3, pol), bs)
        q = 1.0 / (2.0 * math.sqrt(2.0))
        # modes: (0H,0V,1H,1V,2H,2V,3H,3V) = (A_H,A_V,B_H,B_V,X_H,X_V,Y_H,Y_V)
        assert st.amplitude((1, 0, 1, 0, 0, 0, 0, 0)) == pytest.approx(q, abs=1e-12)
        assert st.amplitude((0, 1, 0, 1, 0, 0, 0, 0)) == pytest.approx(q, abs=1e-12)
        assert st.amplitude((0, 0, 0, 0, 1, 0, 1, 0)) == pytest.approx(-q, abs=1e-12)
        assert st.amplitude((0, 0, 0, 0, 0, 1, 0, 1)) == pytest.approx(-q, abs=1e-12)
        assert st.amplitude((1, 0, 0, 0, 0, 0, 1, 0)) == pytest.approx(1j * q, abs=1e-12)
        assert st.amplitude((0, 0, 1, 0, 1, 0, 0, 0)) == pytest.approx(1j * q, abs=1e-12)

    def test_exhaustive_sift_and_agreement(self):
        branches = qkd_branches()
        sift = sum(p for rec, p in branches if rec.kept)
        assert sift == pytest.approx(0.5, abs=1e-12)
        agree = sum(p for rec, p in branches if rec.kept and rec.alice_bit == rec.bob_bit)
        assert agree / sift == pytest.approx(1.0, abs=1e-12)

    def test_kept_rounds_have_zero_qber(self):
        kept = [qkd_round(seed) for seed in range(300)]
        kept = [r for r in kept if r.kept]
        assert kept, "no kept rounds in 300 trials"
        assert all(r.alice_bit == r.bob_bit for r in kept)

    def test_discarded_rounds_carry_no_bits(self):
        for seed in range(200):
            rec = qkd_round(seed)
            if not rec.kept:
                assert rec.alice_bit is None and rec.bob_bit is None

    def test_round_is_deterministic_per_seed(self):
        assert qkd_round(77) == qkd_round(77)


class TestMdiQkd:
    def test_orthogonal_rectilinear_photons_sift_and_agree(self):
        outcomes = set()
        for seed in range(40):
            rec = mdi_qkd_round((RECTILINEAR, 0), (RECTILINEAR, 1), seed=seed)
            assert rec.kept
            assert rec.alice_bit == rec.bob_bit
            outcomes.add(rec.outcome)
        assert outcomes == {BellClass.PHI_MINUS, BellClass.PHI_PLUS}

    def test_parallel_rectilinear_photons_never_classified(self):
        st = tensor(
            polarization_qubit(0, RECTILINEAR, 0), polarization_qubit(1, RECTILINEAR, 0)
        )
        _, probs = bell_analysis(st)
        assert probs[BellClass.AMBIGUOUS] == pytest.approx(1.0, abs=1e-12)

    def test_basis_mismatch_is_discarded(self):
        rec = mdi_qkd_round((RECTILINEAR, 0), (DIAGONAL, 1), seed=1)
        assert not rec.kept and rec.alice_bit is None

    def test_diagonal_rounds_agree_after_flips(self):
        for bits in ((0, 0), (0, 1), (1, 0), (1, 1)):
            for seed in range(30):
                rec = mdi_qkd_round((DIAGONAL, bits[0]), (DIAGONAL, bits[1]), seed=seed)
                if rec.kept:
                    assert rec.alice_bit == rec.bob_bit, (bits, seed, rec)

    def test_hardcoded_relation_table_matches_brute_force(self):
        assert mdi_bit_relation_table() == MDI_BIT_RELATION


class TestPhotonSubtraction:
    def test_single_photon_input(self):
        theta = 0.5
        cond, prob = photon_subtract(number_state(1), theta)
        assert prob == pytest.approx(math.sin(theta) ** 2, abs=1e-12)
        assert abs(cond.amplitude((0,))) == pytest.approx(1.0, abs=1e-12)

    def test_two_photon_input(self):
        theta = 0.1
        cond, prob = photon_subtract(number_state(2), theta)
        c, s = math.cos(theta), math.sin(theta)
        assert prob == pytest.approx(2 * c * c * s * s, abs=1e-12)
        assert abs(cond.amplitude((1,))) == pytest.approx(1.0, abs=1e-12)

    def test_herald_probability_matches_binomial_oracle(self):
        # from |n> the exactly-one-herald amplitude is sqrt(n) cos^(n-1) sin
        amps = {1: math.sqrt(0.25), 2: math.sqrt(0.45), 3: math.sqrt(0.30)}
        st = FockState((Mode(0),), {(n,): a for n, a in amps.items()})
        for theta in (0.05, 0.2, 0.7):
            c, s = math.cos(theta), math.sin(theta)
            expected = sum(a**2 * n * c ** (2 * (n - 1)) * s**2 for n, a in amps.items())
            _, prob = photon_subtract(st, theta)
            assert prob == pytest.approx(expected, abs=1e-12)

    def test_weak_splitter_limit(self):
        st = FockState((Mode(0),), {(1,): INV_SQRT2, (2,): INV_SQRT2})
        cond, _ = photon_subtract(st, 0.05)
        assert 1.0 - fidelity(cond, subtracted_reference(st)) <= 1e-2

    def test_convergence_rates(self):
        # The conditional amplitudes deviate from normalize(a|psi>) at
        # O(theta^2), so the amplitude distance shrinks with slope 2 and the
        # infidelity (its square) with slope 4.
        st = FockState((Mode(0),), {(1,): INV_SQRT2, (2,): INV_SQRT2})
        target = subtracted_reference(st)
        thetas = [0.2, 0.1, 0.05, 0.025]
        infids, dists = [], []
        for theta in thetas:
            cond, _ = photon_subtract(st, theta)
            f = fidelity(cond, target)
            infids.append(1.0 - f)
            # phase-minimized vector distance between unit rays
            dists.append(math.sqrt(2.0 - 2.0 * math.sqrt(f)))
        slope_infid = np.polyfit(np.log(thetas), np.log(infids), 1)[0]
        slope_dist = np.polyfit(np.log(thetas), np.log(dists), 1)[0]
        assert slope_infid == pytest.approx(4.0, abs=0.2)
        assert slope_dist == pytest.approx(2.0, abs=0.2)

    def test_vacuum_input_rejected(self):
        with pytest.raises(ValueError):
            photon_subtract(number_state(0), 0.3)

    def test_theta_domain(self):
        with pytest.raises(ValueError):
            photon_subtract(number_state(1), 0.0)
        with pytest.raises(ValueError):
            photon_subtract(number_state(1), math.pi / 2)


def induced_single_qubit_matrix(gate):
    cols = []
    for a, b in ((1.0, 0.0), (0.0, 1.0)):
        cols.append(gate(dual_rail(a, b)).amplitudes())
    return np.array(cols).T


class TestHadamard:
    def test_matrix_is_exactly_hadamard(self):
        m = induced_single_qubit_matrix(hadamard_dualrail)
        target = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
        assert np.max(np.abs(m - target)) < 1e-12

    def test_matrix_matches_phase_splitter_phase_product(self):
        phase = np.diag([1.0, np.exp(-1j * math.pi / 2)])
        oracle = phase @ np.asarray(bs_mode_matrix(BsParams(math.pi / 4))) @ phase
        m = induced_single_qubit_matrix(hadamard_dualrail)
        assert np.max(np.abs(m - oracle)) < 1e-12

    def test_zero_logical_goes_to_plus(self):
        out = hadamard_dualrail(dual_rail(1.0, 0.0))
        a0, a1 = out.amplitudes()
        assert a0 == pytest.approx(INV_SQRT2, abs=1e-12)
        assert a1 == pytest.approx(INV_SQRT2, abs=1e-12)

    def test_involution(self):
        for a, b in ((1.0, 0.0), (0.0, 1.0)):
            out = hadamard_dualrail(hadamard_dualrail(dual_rail(a, b)))
            a0, a1 = out.amplitudes()
            assert a0 == pytest.approx(a, abs=1e-12)
            assert a1 == pytest.approx(b, abs=1e-12)

    def test_intermediate_splitter_state(self):
        # the bare splitter sends logical 0 to (|0>_L + i|1>_L)/sqrt(2)
        q = dual_rail(1.0, 0.0)
        mid = apply_beamsplitter(q.state, *q.rails, BsParams(math.pi / 4))
        assert mid.amplitude((1, 0)) == pytest.approx(INV_SQRT2, abs=1e-12)
        assert mid.amplitude((0, 1)) == pytest.approx(1j * INV_SQRT2, abs=1e-12)


BASIS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def cnot_matrix():
    cols = []
    for c_bit, t_bit in BASIS:
        control = dual_rail(1 - c_bit, c_bit, arms=(0, 1))
        target = dual_rail(1 - t_bit, t_bit, arms=(2, 3))
        out = cnot_dualrail(control, target)
        cols.append([out.amplitude((1 - cb, cb, 1 - tb, tb)) for cb, tb in BASIS])
    return np.array(cols).T


class TestCnot:
    def test_truth_table(self):
        out = cnot_dualrail(dual_rail(0, 1, arms=(0, 1)), dual_rail(1, 0, arms=(2, 3)))
        assert abs(out.amplitude((0, 1, 0, 1))) == pytest.approx(1.0, abs=1e-12)
        out = cnot_dualrail(dual_rail(1, 0, arms=(0, 1)), dual_rail(1, 0, arms=(2, 3)))
        assert abs(out.amplitude((1, 0, 1, 0))) == pytest.approx(1.0, abs=1e-12)

    def test_matrix_equals_cnot_up_to_global_phase(self):
        m = cnot_matrix()
        target = np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        )
        flat = m.flatten()
        phase = flat[np.argmax(np.abs(flat))]
        phase /= abs(phase)
        assert np.max(np.abs(m / phase - target)) < 1e-12

    def test_creates_maximal_entanglement(self):
        control = dual_rail(INV_SQRT2, INV_SQRT2, arms=(0, 1))
        target = dual_rail(1.0, 0.0, arms=(2, 3))
        out = cnot_dualrail(control, target)
        amp = np.array(
            [[out.amplitude((1 - cb, cb, 1 - tb, tb)) for tb in (0, 1)] for cb in (0, 1)]
        )
        schmidt = np.linalg.svd(amp, compute_uv=False)
        assert np.max(np.abs(schmidt - INV_SQRT2)) < 1e-12

    def test_involution(self):
        control = dual_rail(0.6, 0.8j, arms=(0, 1))
        target = dual_rail(INV_SQRT2, INV_SQRT2, arms=(2, 3))
        joint = tensor(control.state, target.state)
        rails_c = (Mode(0), Mode(1))
        rails_t = (Mode(2), Mode(3))
        twice = apply_cnot(apply_cnot(joint, rails_c, rails_t), rails_c, rails_t)
        keys = set(joint.terms) | set(twice.terms)
        assert max(abs(joint.amplitude(k) - twice.amplitude(k)) for k in keys) < 1e-12

    def test_commutes_with_z_on_control(self):
        control = dual_rail(0.6, 0.8, arms=(0, 1))
        target = dual_rail(INV_SQRT2, 1j * INV_SQRT2, arms=(2, 3))
        joint = tensor(control.state, target.state)
        rails_c = (Mode(0), Mode(1))
        rails_t = (Mode(2), Mode(3))
        z_then_cnot = apply_cnot(apply_phase(joint, Mode(1), math.pi), rails_c, rails_t)
        cnot_then_z = apply_phase(apply_cnot(joint, rails_c, rails_t), Mode(1), math.pi)
        keys = set(z_then_cnot.terms) | set(cnot_then_z.terms)
        assert max(abs(z_then_cnot.amplitude(k) - cnot_then_z.amplitude(k)) for k in keys) < 1e-12

    def test_overlapping_rails_rejected(self):
        joint = tensor(dual_rail(1, 0, arms=(0, 1)).state, dual_rail(1, 0, arms=(2, 3)).state)
        with pytest.raises(ValueError):
            apply_cnot(joint, (Mode(0), Mode(1)), (Mode(1), Mode(2)))


class TestMzi:
    def test_symmetric_splitter_gives_minus_one_logical(self):
        out = mzi(math.pi / 4)
        assert out.amplitude((0, 1)) == pytest.approx(-1.0, abs=1e-12)
        assert abs(out.amplitude((1, 0))) < 1e-12

    def test_theta_zero_is_double_mirror(self):
        out = mzi(0.0)
        assert out.amplitude((1, 0)) == pytest.approx(1j, abs=1e-12)

    def test_general_angle_formula(self):
        for theta in (0.1, 0.3, 0.6, 1.2):
            out = mzi(theta)
            assert out.amplitude((1, 0)) == pytest.approx(1j * math.cos(2 * theta), abs=1e-12)
            assert out.amplitude((0, 1)) == pytest.approx(-math.sin(2 * theta), abs=1e-12)
            assert out.norm() == pytest.approx(1.0, abs=1e-12)

    def test_theta_domain(self):
        with pytest.raises(ValueError):
            mzi(-0.1)


class TestRngBit:
    def test_exact_distribution(self):
        st = apply_beamsplitter(
            FockState((Mode(0), Mode(1)), {(1, 0): 1.0}), Mode(0), Mode(1), BsParams(math.pi / 4)
        )
        dist = photon_distribution(st, st.modes)
        assert dist[(1, 0)] == pytest.approx(0.5, abs=1e-12)
        assert dist[(0, 1)] == pytest.approx(0.5, abs=1e-12)

    def test_deterministic_per_seed(self):
        assert all(rng_bit(seed) == rng_bit(seed) for seed in range(64))

    def test_chi_square(self):
        n = 10_000
        ones = sum(rng_bit(seed) for seed in range(n))
        stat = (ones - n / 2) ** 2 / (n / 4)
        assert stat <= chi2.isf(0.001, df=1)
