"""Antipodal (BPSK) Hadamard words and their joint interferometric detection.

A word of length M = 2^m assigns each slot the sign of a Hadamard-matrix row.
An m-stage cascade of pairwise interferometers, each superposing amplitudes a
distance 2^(m-stage) apart with weights +/- 1/sqrt(2), concentrates the whole
word energy into a single slot whose position identifies the word, turning
uniform-power phase modulation into pulse-position keying.  Adding the
all-minus word and homodyning the first output slot yields a scheme whose
photon efficiency beats the ceiling of any symbol-by-symbol measurement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .infotheory import GaussianMixtureLaw, HybridLaw, MiProblem, mutual_information
from .ppm import PpmParams, ppm_mutual_information

_SQRT_HALF = 1.0 / math.sqrt(2.0)


def _require_power_of_two(m: int) -> None:
    if not isinstance(m, (int, np.integer)) or m < 2 or m & (m - 1):
        raise ValueError(f"order must be a power of two >= 2, got {m!r}")


@dataclass(frozen=True)
class HadamardWord:
    """Sign pattern of one word; index M + 1 denotes the extended all-minus word."""

    order: int
    index: int
    signs: np.ndarray

    def __post_init__(self) -> None:
        _require_power_of_two(self.order)
        if not 1 <= self.index <= self.order + 1:
            raise ValueError("index must lie in 1..order+1")
        signs = np.asarray(self.signs, dtype=np.int64)
        if signs.shape != (self.order,) or not np.all(np.abs(signs) == 1):
            raise ValueError("signs must be a length-order vector of +/-1")
        object.__setattr__(self, "signs", signs)


def hadamard_word(l: int, order: int) -> HadamardWord:
    """The l-th word of length ``order``, l = 1..order.

    Bit i of l-1 contributes a sign factor alternating every 2^i slots, so
    slot k (0-based) carries (-1)^popcount((l-1) & k): the natural-order
    Hadamard matrix row l-1.
    """
    _require_power_of_two(order)
    if not 1 <= l <= order:
        raise ValueError(f"word index must lie in 1..{order}, got {l}")
    k = np.arange(order, dtype=np.uint64)
    parity = np.bitwise_count(np.uint64(l - 1) & k) & 1
    signs = 1 - 2 * parity.astype(np.int64)
    return HadamardWord(order, l, signs)


def extended_all_minus_word(order: int) -> HadamardWord:
    """The extra word of the (M+1)-word scheme: every slot at phase pi."""
    _require_power_of_two(order)
    return HadamardWord(order, order + 1, -np.ones(order, dtype=np.int64))


def cascade_transform(amplitudes) -> np.ndarray:
    """Apply the interferometric cascade to a power-of-two amplitude vector.

    Stage s pairs entries a distance 2^(m-s) apart and replaces them with
    their sum and difference over sqrt(2).  The transform is orthogonal and
    involutive; for the scaled sign vector of word l it returns the full
    energy in slot l (1-based) and exact zeros elsewhere.
    """
    x = np.array(amplitudes, dtype=complex)
    if x.ndim != 1:
        raise ValueError("amplitudes must be a one-dimensional sequence")
    m = x.size
    _require_power_of_two(m)
    distance = m // 2
    while distance >= 1:
        blocks = x.reshape(-1, 2, distance)
        upper = blocks[:, 0, :] + blocks[:, 1, :]
        lower = blocks[:, 0, :] - blocks[:, 1, :]
        blocks[:, 0, :] = upper * _SQRT_HALF
        blocks[:, 1, :] = lower * _SQRT_HALF
        x = blocks.reshape(m)
        distance //= 2
    return x


def hadamard_ppm_mi(order: int, n_s: float) -> float:
    """Bits per slot for jointly detected Hadamard words.

    The cascade maps the word alphabet onto pulse positions, so the mutual
    information equals that of an M-ary direct-detection frame at the same
    per-slot photon number.
    """
    _require_power_of_two(order)
    return ppm_mutual_information(PpmParams(int(order), n_s))


@dataclass(frozen=True)
class ExtendedSchemeParams:
    """(M+1)-word scheme: antipodal pair with joint probability p1.

    The all-plus and all-minus words are sent with probability p1/2 each and
    the remaining M-1 words with (1 - p1)/(M - 1) each.
    """

    order: int
    n_s: float
    p1: float

    def __post_init__(self) -> None:
        _require_power_of_two(self.order)
        if self.n_s < 0:
            raise ValueError("n_s must be nonnegative")
        if not 0.0 <= self.p1 <= 1.0:
            raise ValueError("p1 must lie in [0, 1]")


def extended_scheme_mi(params: ExtendedSchemeParams) -> float:
    """Bits per slot of the (M+1)-word scheme with the hybrid receiver.

    After the cascade, the antipodal pair appears as +/- sqrt(M n_s) in slot 1
    and word l in 2..M as sqrt(M n_s) in slot l.  Slot 1 is homodyned on the
    in-phase quadrature (Gaussian outcome, variance 1/2); the other slots use
    ideal photon counting, so the discrete event is either a click in the one
    energized slot or no click at all.  The mutual information of the joint
    (quadrature, event) outcome is evaluated exactly and divided by M.
    """
    m, n_s, p1 = params.order, params.n_s, params.p1
    probs = np.empty(m + 1)
    probs[0] = p1 / 2.0
    probs[m] = p1 / 2.0
    probs[1:m] = (1.0 - p1) / (m - 1)
    click = -math.expm1(-m * n_s)
    quad_mean = math.sqrt(2.0 * m * n_s)

    def refinement(mean: float) -> GaussianMixtureLaw:
        return GaussianMixtureLaw(np.array([mean]), np.array([1.0]), 0.5)

    # Event 0 is "no click"; event j in 1..M-1 is a click in slot j+1.
    laws = []
    plus_events = np.zeros(m)
    plus_events[0] = 1.0
    laws.append(HybridLaw(plus_events, refinement(quad_mean)))
    for word in range(1, m):
        events = np.zeros(m)
        events[0] = 1.0 - click
        events[word] = click
        laws.append(HybridLaw(events, refinement(0.0)))
    laws.append(HybridLaw(plus_events, refinement(-quad_mean)))
    problem = MiProblem(probs, tuple(laws), refined_event=0)
    return mutual_information(problem) / m


def optimize_p1(order: int, n_s: float, *, tol: float = 1e-6) -> tuple[float, float]:
    """Maximize the extended-scheme information over p1 by golden section.

    Returns (p1*, photon efficiency at the optimum).  The information is
    concave in p1 (it is mutual information of a fixed channel under priors
    linear in p1), so golden-section search converges to the maximum.
    """
    if n_s <= 0:
        raise ValueError("n_s must be positive")

    def objective(p1: float) -> float:
        return extended_scheme_mi(ExtendedSchemeParams(order, n_s, p1))

    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = 0.0, 1.0
    c, d = b - inv_phi * (b - a), a + inv_phi * (b - a)
    fc, fd = objective(c), objective(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = objective(d)
    p1_star = 0.5 * (a + b)
    return p1_star, float(objective(p1_star) / n_s)
