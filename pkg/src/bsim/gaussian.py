"""Gaussian-state calculus: covariance matrices, symplectic transforms,
physicality checks, homodyne conditioning, and the covariance / Monte-Carlo
pictures of continuous-variable teleportation and key distribution.

Quadrature convention: R = (x1, p1, ..., xn, pn) with [x, p] = i and vacuum
covariance I/2.  (The Fock-side homodyne module uses X = (a + a+)/2 with
vacuum variance 1/4; the two conventions are never mixed, and the map between
them is x = sqrt(2) X.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

SQRT2 = math.sqrt(2.0)

_SYMMETRY_TOL = 1e-12
_PHYSICALITY_TOL = 1e-10


class Quadrature(Enum):
    X = 0
    P = 1

    @property
    def projector(self) -> np.ndarray:
        pi = np.zeros((2, 2))
        pi[self.value, self.value] = 1.0
        return pi


@dataclass(frozen=True)
class GaussianState:
    """Zero-or-more-mode Gaussian state: mean vector and covariance matrix,
    both in the ordered (x1, p1, ..., xn, pn) layout."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self) -> None:
        mean = np.array(self.mean, dtype=float)
        cov = np.array(self.cov, dtype=float)
        if mean.ndim != 1 or mean.size % 2:
            raise ValueError("mean must be a flat vector of even length")
        if cov.shape != (mean.size, mean.size):
            raise ValueError("covariance shape must match the mean vector")
        scale = max(1.0, float(np.max(np.abs(cov))))
        if np.max(np.abs(cov - cov.T)) > _SYMMETRY_TOL * scale:
            raise ValueError("covariance matrix must be symmetric")
        cov = (cov + cov.T) / 2.0
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2


def vacuum_state(n_modes: int) -> GaussianState:
    return GaussianState(np.zeros(2 * n_modes), 0.5 * np.eye(2 * n_modes))


def omega(n_modes: int) -> np.ndarray:
    """Symplectic form: the direct sum of n copies of [[0, 1], [-1, 0]]."""
    if n_modes < 1:
        raise ValueError("need at least one mode")
    w = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n_modes), w)


def is_physical(cov: np.ndarray, tol: float = _PHYSICALITY_TOL) -> tuple[bool, float]:
    """Uncertainty-relation test: cov + (i/2) Omega must be positive
    semidefinite.  Returns (verdict, minimum eigenvalue).

    The i/2 carries the commutator normalization of the vacuum-variance-1/2
    convention used here ([x, p] = i, vacuum cov = I/2); the vacuum then
    saturates the bound and 0.1*I fails it with minimum eigenvalue -0.4.
    The tolerance is scaled by the largest covariance entry so strongly
    squeezed states are not rejected for float roundoff.
    """
    cov = np.asarray(cov, dtype=float)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
        raise ValueError("covariance must be square with even dimension")
    scale = max(1.0, float(np.max(np.abs(cov))))
    if np.max(np.abs(cov - cov.T)) > _SYMMETRY_TOL * scale:
        raise ValueError("covariance matrix must be symmetric")
    n = cov.shape[0] // 2
    eigs = np.linalg.eigvalsh(cov + 0.5j * omega(n))
    min_eig = float(eigs[0])
    return min_eig >= -tol * scale, min_eig


def symplectic_phase(phi: float) -> np.ndarray:
    """Single-mode phase-space rotation [[cos, sin], [-sin, cos]]."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, s], [-s, c]])


def symplectic_bs(theta: float, phi: float = math.pi / 2) -> np.ndarray:
    """Two-mode beamsplitter block matrix
    [[cos(theta) I, sin(theta) S_P], [-sin(theta) S_P^T, cos(theta) I]]."""
    c, s = math.cos(theta), math.sin(theta)
    sp = symplectic_phase(phi)
    eye = np.eye(2)
    return np.block([[c * eye, s * sp], [-s * sp.T, c * eye]])


def symplectic_squeeze(s: float) -> np.ndarray:
    """Single-mode squeezer diag(e^-s, e^s): s > 0 squeezes x."""
    return np.diag([math.exp(-s), math.exp(s)])


def is_symplectic(S: np.ndarray, tol: float = 1e-10) -> bool:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2:
        return False
    w = omega(S.shape[0] // 2)
    scale = max(1.0, float(np.max(np.abs(S))) ** 2)
    return bool(np.max(np.abs(S @ w @ S.T - w)) <= tol * scale)


def _embed(S: np.ndarray, modes: Sequence[int], n_modes: int) -> np.ndarray:
    T = np.eye(2 * n_modes)
    for bi, mi in enumerate(modes):
        for bj, mj in enumerate(modes):
            T[2 * mi : 2 * mi + 2, 2 * mj : 2 * mj + 2] = S[2 * bi : 2 * bi + 2, 2 * bj : 2 * bj + 2]
    return T


def apply_symplectic(state: GaussianState, S: np.ndarray, modes: Sequence[int] | None = None) -> GaussianState:
    """Update cov -> S cov S^T and mean -> S mean, with S acting on the given
    modes (all modes by default).  S is checked to be symplectic."""
    S = np.asarray(S, dtype=float)
    if modes is None:
        modes = list(range(state.n_modes))
    if S.shape != (2 * len(modes), 2 * len(modes)):
        raise ValueError("matrix size does not match the selected modes")
    if len(set(modes)) != len(modes) or any(not 0 <= m < state.n_modes for m in modes):
        raise ValueError("invalid mode selection")
    if not is_symplectic(S):
        raise ValueError("matrix is not symplectic")
    T = _embed(S, modes, state.n_modes)
    return GaussianState(T @ state.mean, T @ state.cov @ T.T)


def tmsv(r: float) -> GaussianState:
    """Two-mode squeezed vacuum with blocks A = B = cosh(2r)/2 I and
    C = diag(-sinh(2r)/2, sinh(2r)/2); zero mean.

    Its joint quadratures satisfy <(x_A + x_B)^2> = <(p_A - p_B)^2> =
    exp(-2r).
    """
    if r < 0:
        raise ValueError("squeezing parameter must be non-negative")
    a = 0.5 * math.cosh(2 * r)
    c = 0.5 * math.sinh(2 * r)
    cov = np.array(
        [
            [a, 0.0, -c, 0.0],
            [0.0, a, 0.0, c],
            [-c, 0.0, a, 0.0],
            [0.0, c, 0.0, a],
        ]
    )
    return GaussianState(np.zeros(4), cov)


def epr_from_squeezed(r: float) -> GaussianState:
    """EPR pair built operationally: two equally squeezed vacua (first mode
    squeezed in p, second in x) mixed on a real 50:50 splitter
    (symplectic_bs(pi/4, 0)).

    This reproduces tmsv(r) entry by entry.  Swapping which input carries the
    x squeezing flips the sign of the correlation block, which is the same
    state up to a local pi rotation of one mode; the i-reflection splitter
    convention (phi = pi/2) aligns the squeezing axes instead and produces no
    correlations at all, so the real mixer is the convention used here.
    """
    st = vacuum_state(2)
    st = apply_symplectic(st, symplectic_squeeze(-r), modes=[0])
    st = apply_symplectic(st, symplectic_squeeze(r), modes=[1])
    return apply_symplectic(st, symplectic_bs(math.pi / 4, 0.0), modes=[0, 1])


def squeeze_channel(channel: GaussianState, s: float) -> GaussianState:
    """Single-mode squeeze of the second mode of a two-mode channel, written
    directly on the blocks: B -> Sq B Sq^T, C -> C Sq^T, A unchanged.

    Equivalent to apply_symplectic(channel, symplectic_squeeze(s), [1]); for
    tmsv(r) the blocks become B = cosh(2r)/2 diag(e^-2s, e^2s) and
    C = diag(-sinh(2r) e^-s, sinh(2r) e^s)/2.
    """
    if channel.n_modes != 2:
        raise ValueError("squeeze_channel expects a two-mode channel")
    sq = symplectic_squeeze(s)
    cov = channel.cov
    a_block = cov[:2, :2]
    c_block = cov[:2, 2:]
    b_block = cov[2:, 2:]
    new_cov = np.block([[a_block, c_block @ sq.T], [sq @ c_block.T, sq @ b_block @ sq.T]])
    new_mean = channel.mean.copy()
    new_mean[2:] = sq @ new_mean[2:]
    return GaussianState(new_mean, new_cov)


def homodyne_condition(
    state: GaussianState,
    mode: int,
    quad: Quadrature,
    outcome: float | None = None,
) -> GaussianState:
    """Condition on a homodyne measurement of one quadrature of one mode.

    General Gaussian conditioning: with the state partitioned into the
    measured mode (block B) and the rest (block A, cross block C), the
    conditional covariance of the rest is A - C (Pi B Pi)^+ C^T, using the
    Moore-Penrose pseudo-inverse of the projected 1x1 quadrature block.  The
    conditional mean shifts by the regression of the rest onto the recorded
    outcome (the prior mean when no outcome is given).
    """
    if state.n_modes < 2:
        raise ValueError("conditioning requires at least two modes")
    if not 0 <= mode < state.n_modes:
        raise ValueError("invalid mode index")
    sl = slice(2 * mode, 2 * mode + 2)
    rest = [i for i in range(2 * state.n_modes) if i not in (2 * mode, 2 * mode + 1)]
    b_block = state.cov[sl, sl]
    if b_block[quad.value, quad.value] <= 0.0:
        raise ValueError("measured quadrature variance must be positive")
    c_block = state.cov[np.ix_(rest, [2 * mode, 2 * mode + 1])]
    pi = quad.projector
    inv = np.linalg.pinv(pi @ b_block @ pi)
    cov = state.cov[np.ix_(rest, rest)] - c_block @ inv @ c_block.T
    mean = state.mean[rest].copy()
    if outcome is not None:
        d = np.zeros(2)
        d[quad.value] = outcome - state.mean[2 * mode + quad.value]
        mean = mean + c_block @ inv @ d
    return GaussianState(mean, cov)


# --------------------------------------------------------------------------
# continuous-variable teleportation
# --------------------------------------------------------------------------

# Bell-measurement convention, fixed once: the sender's entangled mode (A)
# and the input mode meet on a real 50:50 mixer whose output slots carry
# (R_A + R_in)/sqrt2 and (R_in - R_A)/sqrt2; x is read out on the first slot
# (xbar = (x_in + x_A)/sqrt2) and p on the second (pbar = (p_in - p_A)/sqrt2).
# The receiver displaces by G*(xbar, pbar).  With gain sqrt2 this makes
# x_out = x_in + (x_A + x_B) and p_out = p_in - (p_A - p_B) identically, and
# the two-mode squeezed channel adds exactly exp(-2r) I of noise.


def _frac_matrix(a: np.ndarray) -> list[list[Fraction]]:
    return [[Fraction(float(v)) for v in row] for row in np.atleast_2d(a)]


def _frac_matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(rows)
    ]


def _frac_transpose(a):
    return [list(col) for col in zip(*a)]


def _frac_inv2(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det == 0:
        raise ValueError("measured covariance block is singular")
    return [[m[1][1] / det, -m[0][1] / det], [-m[1][0] / det, m[0][0] / det]]


def cv_teleport_cov(
    sigma_in: np.ndarray, channel: GaussianState, gain: float = SQRT2
) -> np.ndarray:
    """Output covariance of continuous-variable teleportation.

    Realized as the honest map -- symplectic 50:50 mixing of the input with
    the sender's channel mode, exact joint conditioning on (xbar, pbar), and
    the outcome-proportional displacement of the receiver -- rather than as a
    closed-form shortcut.  The arithmetic runs over exact rationals so the
    near-perfect cancellations of a strongly squeezed channel survive; for a
    tmsv(r) channel at gain sqrt2 the result is sigma_in + exp(-2r) I.
    """
    sigma_in = np.asarray(sigma_in, dtype=float)
    if sigma_in.shape != (2, 2):
        raise ValueError("sigma_in must be 2x2")
    if np.max(np.abs(sigma_in - sigma_in.T)) > _SYMMETRY_TOL:
        raise ValueError("sigma_in must be symmetric")
    if channel.n_modes != 2:
        raise ValueError("channel must be a two-mode Gaussian state")
    ok, min_eig = is_physical(channel.cov)
    if not ok:
        raise ValueError(f"channel is unphysical (min eigenvalue {min_eig:.3g})")
    if not gain > 0.0:
        raise ValueError("gain must be positive")

    zero = Fraction(0)
    one = Fraction(1)
    g = Fraction(float(gain))
    c = Fraction(math.cos(math.pi / 4))
    s = Fraction(math.sin(math.pi / 4))

    # coordinates: (x_in, p_in, x_A, p_A, x_B, p_B)
    sig = [[zero] * 6 for _ in range(6)]
    fin = _frac_matrix(sigma_in)
    fch = _frac_matrix(channel.cov)
    for i in range(2):
        for j in range(2):
            sig[i][j] = fin[i][j]
    for i in range(4):
        for j in range(4):
            sig[2 + i][2 + j] = fch[i][j]

    # real 50:50 mixer on the ordered pair (A, in)
    T = [[one if i == j else zero for j in range(6)] for i in range(6)]
    for k in range(2):
        T[2 + k][2 + k] = c
        T[2 + k][k] = s
        T[k][2 + k] = -s
        T[k][k] = c
    sig = _frac_matmul(_frac_matmul(T, sig), _frac_transpose(T))

    # measure x on the A slot (coordinate 2) and p on the in slot (coordinate 1)
    m_idx = [2, 1]
    b_idx = [4, 5]
    smm = [[sig[i][j] for j in m_idx] for i in m_idx]
    sbm = [[sig[i][j] for j in m_idx] for i in b_idx]
    sbb = [[sig[i][j] for j in b_idx] for i in b_idx]

    smm_inv = _frac_inv2(smm)
    L = _frac_matmul(sbm, smm_inv)
    cond = [
        [sbb[i][j] - _frac_matmul(_frac_matmul(L, smm), _frac_transpose(L))[i][j] for j in range(2)]
        for i in range(2)
    ]
    LG = [[L[i][j] + (g if i == j else zero) for j in range(2)] for i in range(2)]
    disp = _frac_matmul(_frac_matmul(LG, smm), _frac_transpose(LG))
    return np.array([[float(cond[i][j] + disp[i][j]) for j in range(2)] for i in range(2)])


@dataclass(frozen=True)
class CvTeleportStats:
    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    cov_xp: float
    trials: int


def cv_teleport_mc(
    x_in: float,
    p_in: float,
    r: float,
    gain: float = SQRT2,
    trials: int = 10_000,
    seed: int = 0,
) -> CvTeleportStats:
    """Monte-Carlo teleportation of a coherent state at the quadrature level.

    Each trial samples the input's vacuum-noise quadratures and an EPR pair
    from tmsv(r), forms xbar = (x_in + x_A)/sqrt2 and pbar = (p_in -
    p_A)/sqrt2, and displaces the receiver's quadratures by gain*(xbar,
    pbar).  At gain sqrt2 the per-sample identities x_out = x_in + (x_A +
    x_B) and p_out = p_in - (p_A - p_B) are verified on every trial.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = np.random.default_rng(seed)
    chan = rng.multivariate_normal(np.zeros(4), tmsv(r).cov, size=trials, method="cholesky")
    x_a, p_a, x_b, p_b = chan[:, 0], chan[:, 1], chan[:, 2], chan[:, 3]
    xi = x_in + rng.normal(0.0, math.sqrt(0.5), trials)
    pi = p_in + rng.normal(0.0, math.sqrt(0.5), trials)
    xbar = (xi + x_a) / SQRT2
    pbar = (pi - p_a) / SQRT2
    x_out = x_b + gain * xbar
    p_out = p_b + gain * pbar
    if abs(gain * gain - 2.0) < 1e-12:
        dev_x = np.max(np.abs(x_out - (xi + x_a + x_b)))
        dev_p = np.max(np.abs(p_out - (pi - (p_a - p_b))))
        if max(dev_x, dev_p) > 1e-10:
            raise AssertionError("teleportation sample identity violated")
    cov = np.cov(np.vstack([x_out, p_out]), ddof=1) if trials > 1 else np.zeros((2, 2))
    return CvTeleportStats(
        mean_x=float(np.mean(x_out)),
        mean_p=float(np.mean(p_out)),
        var_x=float(cov[0, 0]),
        var_p=float(cov[1, 1]),
        cov_xp=float(cov[0, 1]),
        trials=trials,
    )


# --------------------------------------------------------------------------
# continuous-variable key distribution
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CvQkdRound:
    alice_quad: Quadrature
    bob_quad: Quadrature
    alice_value: float
    bob_value: float
    kept: bool


def cv_qkd_round(r: float, s: float, seed: int = 0) -> CvQkdRound:
    """One round of squeezed-channel key distribution: both parties homodyne
    a uniformly chosen quadrature of their half of squeeze_channel(tmsv(r),
    s); rounds with matching choices are kept.

    The joint sample is drawn from the 2x2 covariance of the chosen
    quadrature pair.  With the correlation block used here kept x-values are
    anticorrelated and kept p-values correlated, both with magnitude
    tanh(2r) at s = 0; only the magnitude is protocol-relevant.
    """
    rng = np.random.default_rng(seed)
    alice_quad = Quadrature.X if rng.integers(0, 2) == 0 else Quadrature.P
    bob_quad = Quadrature.X if rng.integers(0, 2) == 0 else Quadrature.P
    channel = squeeze_channel(tmsv(r), s)
    idx = [alice_quad.value, 2 + bob_quad.value]
    sub = channel.cov[np.ix_(idx, idx)]
    vals = rng.multivariate_normal(np.zeros(2), sub, method="cholesky")
    return CvQkdRound(
        alice_quad=alice_quad,
        bob_quad=bob_quad,
        alice_value=float(vals[0]),
        bob_value=float(vals[1]),
        kept=alice_quad == bob_quad,
    )
