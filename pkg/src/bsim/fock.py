"""Sparse multimode Fock states and exact passive linear-optical transforms.

A state is a sparse map from photon-occupation tuples to complex amplitudes
over a fixed, ordered list of modes.  Beamsplitters, phase shifters, and
polarizing beamsplitters conserve total photon number and are applied block
by block through the exact binomial expansion of the mode substitution rule,
so the photon cutoff only constrains state construction and ladder operators;
it never truncates a passive transform.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

Occupation = tuple[int, ...]

#: amplitudes below this magnitude are dropped after every transform
PRUNE_THRESHOLD = 1e-14
#: tolerance for treating a state as unit norm
NORM_TOL = 1e-12
DEFAULT_CUTOFF = 6

H = "H"
V = "V"
_POLS = (None, H, V)


@dataclass(frozen=True)
class Mode:
    """One optical mode: a spatial arm plus an optional polarization label."""

    spatial: int
    pol: str | None = None

    def __post_init__(self) -> None:
        if self.pol not in _POLS:
            raise ValueError(f"polarization must be one of {_POLS}, got {self.pol!r}")

    def __repr__(self) -> str:
        return f"{self.spatial}{self.pol or ''}"


def pol_pair(arm: int) -> tuple[Mode, Mode]:
    """The (H, V) mode pair of one spatial arm."""
    return Mode(arm, H), Mode(arm, V)


@dataclass(frozen=True)
class BsParams:
    """Beamsplitter angles: transmission t = cos(theta), reflection
    r = sin(theta) * exp(i*phi).

    The default phi = pi/2 puts the full reflection phase on r (r = i*sin
    theta for a symmetric splitter); energy conservation t*conj(r) +
    conj(t)*r = 0 then holds by construction.
    """

    theta: float
    phi: float = math.pi / 2

    @property
    def t(self) -> float:
        return math.cos(self.theta)

    @property
    def r(self) -> complex:
        return math.sin(self.theta) * cmath.exp(1j * self.phi)


def bs_mode_matrix(params: BsParams) -> np.ndarray:
    """2x2 output-in-terms-of-input mode matrix [[t, r], [r, t]].

    Unitary whenever phi is an odd multiple of pi/2 (the convention used
    throughout); theta = 0 is fully transmissive, theta = pi/2 with
    phi = pi/2 is a mirror ([[0, i], [i, 0]]).
    """
    t = complex(params.t)
    r = params.r
    return np.array([[t, r], [r, t]])


class FockState:
    """Sparse superposition of occupation vectors with complex amplitudes.

    Instances are immutable values: every operation returns a new state.
    ``normalized`` records whether the stored amplitudes form a unit vector;
    ladder operators and raw superpositions produce flagged (unnormalized)
    states, which the measurement layer refuses to interpret as physical
    states until they are normalized.
    """

    __slots__ = ("modes", "terms", "cutoff", "normalized", "_pos")

    def __init__(
        self,
        modes: Iterable[Mode],
        terms: Mapping[Occupation, complex],
        cutoff: int = DEFAULT_CUTOFF,
        normalized: bool | None = None,
    ) -> None:
        modes = tuple(modes)
        if len(set(modes)) != len(modes):
            raise ValueError("mode labels must be unique")
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        clean: dict[Occupation, complex] = {}
        for occ, amp in terms.items():
            occ = tuple(int(n) for n in occ)
            if len(occ) != len(modes):
                raise ValueError(f"occupation {occ} does not match {len(modes)} modes")
            if any(n < 0 for n in occ):
                raise ValueError(f"negative occupation in {occ}")
            if sum(occ) > cutoff:
                raise ValueError(f"term {occ} exceeds photon cutoff {cutoff}")
            a = complex(amp)
            if abs(a) >= PRUNE_THRESHOLD:
                clean[occ] = a
        self.modes = modes
        self.terms = MappingProxyType(clean)
        self.cutoff = cutoff
        self._pos = {m: i for i, m in enumerate(modes)}
        if normalized is None:
            normalized = abs(self.norm() - 1.0) <= NORM_TOL
        self.normalized = normalized

    @classmethod
    def vacuum(cls, modes: Iterable[Mode], cutoff: int = DEFAULT_CUTOFF) -> "FockState":
        modes = tuple(modes)
        return cls(modes, {(0,) * len(modes): 1.0}, cutoff)

    @classmethod
    def basis(cls, modes: Iterable[Mode], occ: Occupation, cutoff: int = DEFAULT_CUTOFF) -> "FockState":
        """Single occupation-number basis state |occ>."""
        return cls(modes, {tuple(occ): 1.0}, cutoff)

    def index_of(self, mode: Mode) -> int:
        try:
            return self._pos[mode]
        except KeyError:
            raise ValueError(f"mode {mode!r} is not part of this state") from None

    def amplitude(self, occ: Occupation) -> complex:
        return self.terms.get(tuple(occ), 0j)

    def norm(self) -> float:
        return math.sqrt(math.fsum(abs(a) ** 2 for a in self.terms.values()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"FockState(0 over {self.modes})"
        parts = [f"({a:.4g})|{','.join(map(str, occ))}>" for occ, a in sorted(self.terms.items())]
        if len(parts) > 6:
            parts = parts[:6] + ["..."]
        return "FockState(" + " + ".join(parts) + ")"


def tensor(s1: FockState, s2: FockState) -> FockState:
    """Product state on the concatenated (disjoint) mode lists.

    The cutoff of the product is the sum of the factors' cutoffs, so no
    term of the product can violate it.
    """
    if set(s1.modes) & set(s2.modes):
        raise ValueError("tensor factors must live on disjoint modes")
    out: dict[Occupation, complex] = {}
    for o1, a1 in s1.terms.items():
        for o2, a2 in s2.terms.items():
            out[o1 + o2] = a1 * a2
    return FockState(
        s1.modes + s2.modes,
        out,
        cutoff=s1.cutoff + s2.cutoff,
        normalized=s1.normalized and s2.normalized,
    )


def number_state(n: int, cutoff: int | None = None) -> FockState:
    """Single-mode photon-number state |n> on Mode(0)."""
    if n < 0:
        raise ValueError("photon number must be non-negative")
    if cutoff is None:
        cutoff = max(DEFAULT_CUTOFF, n)
    return FockState((Mode(0),), {(n,): 1.0}, cutoff)


def coherent_state(alpha: complex, cutoff: int = 12) -> FockState:
    """Cutoff-truncated coherent state, renormalized.

    Choose the cutoff so the truncated tail is negligible (for |alpha|^2 = 1
    a cutoff of 12 leaves tail mass below 1e-10).
    """
    alpha = complex(alpha)
    amps = {}
    for n in range(cutoff + 1):
        amps[(n,)] = cmath.exp(-abs(alpha) ** 2 / 2) * alpha**n / math.sqrt(math.factorial(n))
    norm = math.sqrt(math.fsum(abs(a) ** 2 for a in amps.values()))
    if norm == 0.0:
        raise ValueError("coherent amplitude underflows at this cutoff")
    return FockState((Mode(0),), {k: a / norm for k, a in amps.items()}, cutoff, normalized=True)


@lru_cache(maxsize=None)
def _pair_coefficients(
    m: int, n: int, s00: complex, s01: complex, s10: complex, s11: complex
) -> tuple[complex, ...]:
    """Amplitudes <p, m+n-p| W |m, n> for the two-mode photon-number block.

    W is the passive unitary whose creation-operator substitution matrix is
    [[s00, s01], [s10, s11]]; the block expansion is
    (m! n!)^{-1/2} (s00 a+ + s01 b+)^m (s10 a+ + s11 b+)^n |0, 0>.
    """
    total = m + n
    fact = math.factorial
    out = []
    for p in range(total + 1):
        q = total - p
        acc = 0j
        for u in range(max(0, p - n), min(m, p) + 1):
            acc += (
                math.comb(m, u)
                * math.comb(n, p - u)
                * s00**u
                * s01 ** (m - u)
                * s10 ** (p - u)
                * s11 ** (n - p + u)
            )
        out.append(acc * math.sqrt(fact(p) * fact(q) / (fact(m) * fact(n))))
    return tuple(out)


def _check_unitary_2x2(S: np.ndarray) -> None:
    dev = np.max(np.abs(S @ S.conj().T - np.eye(2)))
    if dev > 1e-10:
        raise ValueError(f"mode matrix is not unitary (deviation {dev:.3g})")


def apply_mode_unitary(state: FockState, m1: Mode, m2: Mode, matrix: np.ndarray) -> FockState:
    """Apply the passive two-mode unitary with creation-operator substitution
    a1+ -> S[0,0] a1+ + S[0,1] a2+ and a2+ -> S[1,0] a1+ + S[1,1] a2+.

    Photon number per term is conserved, so the result is exact at any
    cutoff.  S must be unitary.
    """
    i, j = state.index_of(m1), state.index_of(m2)
    if i == j:
        raise ValueError("the two modes must differ")
    S = np.asarray(matrix, dtype=complex)
    if S.shape != (2, 2):
        raise ValueError("mode matrix must be 2x2")
    _check_unitary_2x2(S)
    s00, s01, s10, s11 = (complex(S[0, 0]), complex(S[0, 1]), complex(S[1, 0]), complex(S[1, 1]))
    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        m, n = occ[i], occ[j]
        if m + n == 0:
            out[occ] = out.get(occ, 0j) + amp
            continue
        base = list(occ)
        coeffs = _pair_coefficients(m, n, s00, s01, s10, s11)
        for p, coeff in enumerate(coeffs):
            if coeff == 0j:
                continue
            base[i] = p
            base[j] = m + n - p
            key = tuple(base)
            out[key] = out.get(key, 0j) + amp * coeff
    return FockState(state.modes, out, state.cutoff, normalized=state.normalized)


def apply_beamsplitter(state: FockState, a: Mode, b: Mode, params: BsParams) -> FockState:
    """Mix modes a and b on a beamsplitter.

    The creation-operator substitution is a+ -> t a+ + r b+ and
    b+ -> -conj(r) a+ + t b+.  For phi = +-pi/2 (the standard convention
    here) -conj(r) equals r, i.e. the substitution matrix is exactly the
    symmetric mode matrix [[t, r], [r, t]]; for other phi the conjugated
    column keeps the transform unitary.
    """
    t = complex(params.t)
    r = params.r
    S = np.array([[t, r], [-r.conjugate(), t]])
    return apply_mode_unitary(state, a, b, S)


def apply_phase(state: FockState, m: Mode, phi: float) -> FockState:
    """Phase shift: each term gains exp(i * phi * n_m)."""
    i = state.index_of(m)
    out = {occ: amp * cmath.exp(1j * phi * occ[i]) for occ, amp in state.terms.items()}
    return FockState(state.modes, out, state.cutoff, normalized=state.normalized)


def apply_pbs(state: FockState, in1: int, in2: int) -> FockState:
    """Polarizing beamsplitter between two spatial arms.

    H occupations pass straight through; V occupations swap arms and pick up
    a reflection phase i per V photon (the theta = pi/2, phi = pi/2 mirror
    restricted to the V modes).  Both arms must carry H and V modes.
    """
    for arm in (in1, in2):
        for pol in (H, V):
            if Mode(arm, pol) not in state._pos:
                raise ValueError(f"arm {arm} is missing its {pol} mode")
    iv1, iv2 = state.index_of(Mode(in1, V)), state.index_of(Mode(in2, V))
    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        nv1, nv2 = occ[iv1], occ[iv2]
        base = list(occ)
        base[iv1], base[iv2] = nv2, nv1
        key = tuple(base)
        out[key] = out.get(key, 0j) + amp * 1j ** (nv1 + nv2)
    return FockState(state.modes, out, state.cutoff, normalized=state.normalized)


def creation(state: FockState, m: Mode) -> FockState:
    """Ladder raise on mode m with the sqrt(n+1) factor; result is flagged
    unnormalized.  Raises if any term would exceed the cutoff."""
    i = state.index_of(m)
    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        if sum(occ) + 1 > state.cutoff:
            raise ValueError(f"creation on {occ} exceeds photon cutoff {state.cutoff}")
        base = list(occ)
        base[i] += 1
        out[tuple(base)] = amp * math.sqrt(occ[i] + 1)
    return FockState(state.modes, out, state.cutoff, normalized=False)


def annihilation(state: FockState, m: Mode) -> FockState:
    """Ladder lower on mode m with the sqrt(n) factor; result is flagged
    unnormalized and may be the zero vector."""
    i = state.index_of(m)
    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        if occ[i] == 0:
            continue
        base = list(occ)
        base[i] -= 1
        out[tuple(base)] = amp * math.sqrt(occ[i])
    return FockState(state.modes, out, state.cutoff, normalized=False)


def inner_product(s1: FockState, s2: FockState) -> complex:
    """<s1|s2> over identical mode lists."""
    if s1.modes != s2.modes:
        raise ValueError("inner product requires identical mode lists")
    small, other = (s1.terms, s2.terms) if len(s1.terms) <= len(s2.terms) else (s2.terms, s1.terms)
    acc = 0j
    for occ in small:
        if occ in other:
            acc += s1.terms[occ].conjugate() * s2.terms[occ]
    return acc


def normalize(state: FockState) -> tuple[FockState, float]:
    """Scale to unit norm; returns (unit state, original norm)."""
    n = state.norm()
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    out = {occ: amp / n for occ, amp in state.terms.items()}
    return FockState(state.modes, out, state.cutoff, normalized=True), n


def fidelity(s1: FockState, s2: FockState) -> float:
    """|<s1|s2>|^2 after scaling both arguments to unit norm."""
    n1, n2 = s1.norm(), s2.norm()
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("fidelity of a zero vector is undefined")
    return abs(inner_product(s1, s2)) ** 2 / (n1**2 * n2**2)
