"""Entropy and mutual-information engine plus closed-form capacity limits.

All information quantities are in bits (base-2 logarithms) with the
convention 0 log 0 = 0.  The closed forms cover the discrete-slot AWGN
channel with mean received signal photons n_s and excess-noise photons n_n
per slot:

  capacity_shannon_1q   C = (1/2) log2(1 + 4 n_s / (2 n_n + 1))
  capacity_shannon_2q   C = log2(1 + n_s / (n_n + 1))
  capacity_holevo       C = g(n_s + n_n) - g(n_n)
  capacity_fock         C = g(nbar)          (lossless photon-number encoding)

where g(v) = (v+1) log2(v+1) - v log2 v is the entropy of a thermal state
with mean photon number v (thermal_entropy below).  The homodyne shot-noise
variance 1/2 per quadrature is built into the Shannon forms.

The mutual-information engine accepts a discrete-input channel description
(MiProblem) whose per-input conditional law is one of

  * a finite pmf over a shared outcome alphabet,
  * a univariate Gaussian mixture with a common variance,
  * a hybrid law: a shared discrete event alphabet in which exactly one
    event is refined by a univariate Gaussian mixture.

Differential entropies of Gaussian mixtures are integrated with composite
Simpson quadrature over the mean range extended by ten standard deviations,
doubling the subdivision until successive refinements agree to the requested
absolute tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

LOG2_E = math.log2(math.e)

_PMF_TOL = 1e-9
_PROB_TOL = 1e-12


def discrete_entropy(probs) -> float:
    """Shannon entropy in bits of a probability vector (0 log 0 = 0)."""
    p = np.asarray(probs, dtype=float)
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def binary_entropy(p: float) -> float:
    """Entropy in bits of a Bernoulli(p) variable."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return discrete_entropy([p, 1.0 - p])


def thermal_entropy(v: float) -> float:
    """g(v) = (v+1) log2(v+1) - v log2 v, the thermal-state entropy in bits."""
    if v < 0:
        raise ValueError("mean photon number must be nonnegative")
    if v == 0:
        return 0.0
    return (v + 1.0) * math.log2(v + 1.0) - v * math.log2(v)


def capacity_shannon_1q(n_s: float, n_n: float = 0.0) -> float:
    """Shannon limit for single-quadrature encoding with shot-noise homodyning."""
    _check_photon_numbers(n_s, n_n)
    return 0.5 * math.log2(1.0 + 4.0 * n_s / (2.0 * n_n + 1.0))


def capacity_shannon_2q(n_s: float, n_n: float = 0.0) -> float:
    """Shannon limit for two-quadrature encoding with shot-noise homodyning."""
    _check_photon_numbers(n_s, n_n)
    return math.log2(1.0 + n_s / (n_n + 1.0))


def capacity_holevo(n_s: float, n_n: float = 0.0) -> float:
    """Ultimate capacity over all physical detection strategies, bits/slot."""
    _check_photon_numbers(n_s, n_n)
    return thermal_entropy(n_s + n_n) - thermal_entropy(n_n)


def capacity_fock(nbar: float) -> float:
    """Capacity of lossless photon-number encoding with ideal counting.

    Equals thermal_entropy(nbar), coinciding with the loss-only
    capacity_holevo(nbar, 0).
    """
    return thermal_entropy(nbar)


def holevo_advantage(n_s: float) -> float:
    """Excess of g(n_s) over log2(1+n_s); tends to log2(e) for n_s >> 1."""
    if n_s <= 0:
        raise ValueError("n_s must be positive")
    return thermal_entropy(n_s) - math.log2(1.0 + n_s)


def pie(bits_per_slot: float, n_s: float) -> float:
    """Photon information efficiency C / n_s in bits per received photon."""
    if n_s <= 0:
        raise ValueError("pie requires n_s > 0; use the dedicated limit forms at n_s = 0")
    return bits_per_slot / n_s


def pie_shannon_limits(n_n: float) -> tuple[float, float]:
    """Small-n_s PIE of the two Shannon limits: (1-quadrature, 2-quadrature).

    Returns (2 log2 e / (1 + 2 n_n), log2 e / (1 + n_n)); both tend to
    (log2 e)/n_n when the excess noise dominates the shot noise.
    """
    if n_n < 0:
        raise ValueError("n_n must be nonnegative")
    return 2.0 * LOG2_E / (1.0 + 2.0 * n_n), LOG2_E / (1.0 + n_n)


def pie_holevo_noisy_limit(n_n: float) -> float:
    """Small-n_s ceiling of the Holevo PIE at fixed excess noise, log2(1 + 1/n_n)."""
    if n_n <= 0:
        raise ValueError("the noisy PIE ceiling requires n_n > 0 (it diverges at 0)")
    return math.log2(1.0 + 1.0 / n_n)


def rate(bits_per_slot: float, slot_rate: float) -> float:
    """Information rate in bits per second, R = B * C."""
    if slot_rate <= 0:
        raise ValueError("slot_rate must be positive")
    return bits_per_slot * slot_rate


def _check_photon_numbers(n_s: float, n_n: float) -> None:
    if n_s < 0:
        raise ValueError("n_s must be nonnegative")
    if n_n < 0:
        raise ValueError("n_n must be nonnegative")


# ---------------------------------------------------------------------------
# Mutual-information engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscreteLaw:
    """Finite conditional pmf over the problem's shared outcome alphabet."""

    pmf: np.ndarray

    def __post_init__(self) -> None:
        pmf = np.atleast_1d(np.asarray(self.pmf, dtype=float))
        if np.any(pmf < -_PMF_TOL):
            raise ValueError("pmf entries must be nonnegative")
        if abs(pmf.sum() - 1.0) > _PMF_TOL:
            raise ValueError(f"conditional pmf must be normalized, sums to {pmf.sum()!r}")
        object.__setattr__(self, "pmf", np.clip(pmf, 0.0, None))


@dataclass(frozen=True)
class GaussianMixtureLaw:
    """Univariate Gaussian mixture with one variance shared by all components."""

    means: np.ndarray
    weights: np.ndarray
    variance: float

    def __post_init__(self) -> None:
        means = np.atleast_1d(np.asarray(self.means, dtype=float))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if means.shape != weights.shape or means.size == 0:
            raise ValueError("means and weights must be equal-length, nonempty")
        if np.any(weights < 0):
            raise ValueError("mixture weights must be nonnegative")
        if abs(weights.sum() - 1.0) > _PMF_TOL:
            raise ValueError(
                f"mixture weights must be normalized, sum to {weights.sum()!r}"
            )
        if self.variance <= 0:
            raise ValueError("variance must be positive")
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "weights", weights)


@dataclass(frozen=True)
class HybridLaw:
    """Discrete events over a shared alphabet, one of them refined by a mixture.

    event_probs is the conditional law of the discrete event; the problem-wide
    refined event additionally produces a continuous value drawn from
    ``refinement`` whenever it occurs.
    """

    event_probs: np.ndarray
    refinement: GaussianMixtureLaw

    def __post_init__(self) -> None:
        probs = np.atleast_1d(np.asarray(self.event_probs, dtype=float))
        if np.any(probs < -_PMF_TOL):
            raise ValueError("event probabilities must be nonnegative")
        if abs(probs.sum() - 1.0) > _PMF_TOL:
            raise ValueError(
                f"event probabilities must be normalized, sum to {probs.sum()!r}"
            )
        object.__setattr__(self, "event_probs", np.clip(probs, 0.0, None))


@dataclass(frozen=True)
class MiProblem:
    """Discrete-input memoryless channel: input priors plus conditional laws.

    All laws must be of one kind.  For hybrid laws, ``refined_event`` names
    the shared event index carrying the continuous refinement.
    """

    input_probs: np.ndarray
    laws: tuple
    refined_event: int | None = None

    def __post_init__(self) -> None:
        probs = np.atleast_1d(np.asarray(self.input_probs, dtype=float))
        laws = tuple(self.laws)
        if probs.size == 0 or probs.size != len(laws):
            raise ValueError("need one conditional law per input symbol")
        if np.any(probs < 0):
            raise ValueError("input probabilities must be nonnegative")
        if abs(probs.sum() - 1.0) > _PROB_TOL:
            raise ValueError(
                f"input probabilities must sum to 1 within 1e-12, got {probs.sum()!r}"
            )
        kinds = {type(law) for law in laws}
        if len(kinds) != 1:
            raise ValueError("all conditional laws must be of the same kind")
        kind = kinds.pop()
        if kind is DiscreteLaw:
            sizes = {law.pmf.size for law in laws}
            if len(sizes) != 1:
                raise ValueError("discrete laws must share one outcome alphabet")
            if self.refined_event is not None:
                raise ValueError("refined_event applies to hybrid laws only")
        elif kind is GaussianMixtureLaw:
            _require_common_variance(laws)
            if self.refined_event is not None:
                raise ValueError("refined_event applies to hybrid laws only")
        elif kind is HybridLaw:
            sizes = {law.event_probs.size for law in laws}
            if len(sizes) != 1:
                raise ValueError("hybrid laws must share one event alphabet")
            n_events = sizes.pop()
            if self.refined_event is None or not 0 <= self.refined_event < n_events:
                raise ValueError("hybrid laws need a valid shared refined_event index")
            _require_common_variance(law.refinement for law in laws)
        else:
            raise TypeError(f"unsupported conditional law type: {kind!r}")
        object.__setattr__(self, "input_probs", probs)
        object.__setattr__(self, "laws", laws)


def _require_common_variance(mixtures) -> float:
    variances = {float(m.variance) for m in mixtures}
    if len(variances) != 1:
        raise ValueError("all Gaussian mixtures in a problem must share one variance")
    return variances.pop()


def mutual_information(problem: MiProblem, *, tol: float = 1e-7) -> float:
    """Mutual information I(X;Y) in bits for the given channel description.

    Finite pmfs are summed exactly; Gaussian-mixture outputs use adaptive
    quadrature of differential entropies (the shared-variance conditional
    entropy constant cancels in the difference); hybrid laws combine the
    discrete sum with a quadrature term for the refined event.  The result is
    accurate to the absolute tolerance ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    entropy_tol = min(1e-9, tol / 10.0)
    p = problem.input_probs
    law = problem.laws[0]
    if isinstance(law, DiscreteLaw):
        mi = _discrete_mi(p, problem.laws)
    elif isinstance(law, GaussianMixtureLaw):
        mi = _mixture_mi(p, problem.laws, entropy_tol)
    else:
        mi = _hybrid_mi(p, problem.laws, problem.refined_event, entropy_tol)
    if mi < -1e-6:
        raise ArithmeticError(f"mutual information evaluated to {mi}, check the laws")
    return float(max(mi, 0.0))


def _discrete_mi(p: np.ndarray, laws) -> float:
    matrix = np.vstack([law.pmf for law in laws])
    marginal = p @ matrix
    h_y_given_x = sum(
        px * discrete_entropy(row) for px, row in zip(p, matrix) if px > 0
    )
    return discrete_entropy(marginal) - h_y_given_x


def _mixture_mi(p: np.ndarray, laws, entropy_tol: float) -> float:
    variance = laws[0].variance
    means, weights = _pooled_mixture(p, laws)
    h_y = _mixture_entropy_bits(means, weights, variance, entropy_tol)
    h_y_given_x = sum(
        px * _mixture_entropy_bits(law.means, law.weights, law.variance, entropy_tol)
        for px, law in zip(p, laws)
        if px > 0
    )
    return h_y - h_y_given_x


def _hybrid_mi(p: np.ndarray, laws, refined: int, entropy_tol: float) -> float:
    """MI of the outcome (event, value-if-refined-event).

    The mixed outcome entropy splits as H(D) + P(refined) h(Y | refined), so

        I = H(D) - H(D|X)
            + P(refined) h(Y | refined)
            - sum_x p_x q_x(refined) h(Y | refined, x),

    with the continuous parts evaluated by mixture-entropy quadrature.
    """
    q = np.vstack([law.event_probs for law in laws])
    marginal_events = p @ q
    discrete_part = discrete_entropy(marginal_events) - sum(
        px * discrete_entropy(row) for px, row in zip(p, q) if px > 0
    )
    refined_weights = p * q[:, refined]
    p_refined = refined_weights.sum()
    if p_refined <= 0:
        return discrete_part
    variance = laws[0].refinement.variance
    pooled_means = np.concatenate([law.refinement.means for law in laws])
    pooled_weights = np.concatenate(
        [
            w * law.refinement.weights
            for w, law in zip(refined_weights, laws)
        ]
    )
    h_marginal = _mixture_entropy_bits(
        pooled_means, pooled_weights / p_refined, variance, entropy_tol
    )
    h_conditional = sum(
        w
        * _mixture_entropy_bits(
            law.refinement.means, law.refinement.weights, variance, entropy_tol
        )
        for w, law in zip(refined_weights, laws)
        if w > 0
    )
    return discrete_part + p_refined * h_marginal - h_conditional


def _pooled_mixture(p: np.ndarray, laws) -> tuple[np.ndarray, np.ndarray]:
    means = np.concatenate([law.means for law in laws])
    weights = np.concatenate([px * law.weights for px, law in zip(p, laws)])
    return means, weights


def _mixture_entropy_bits(
    means, weights, variance: float, abs_tol: float = 1e-9
) -> float:
    """Differential entropy in bits of a shared-variance Gaussian mixture."""
    means = np.asarray(means, dtype=float)
    weights = np.asarray(weights, dtype=float)
    keep = weights > 0
    means, weights = means[keep], weights[keep]
    if means.size == 0:
        raise ValueError("mixture has no mass")
    # Merge components with identical means; a single Gaussian has the exact
    # closed-form entropy.
    unique_means, inverse = np.unique(means, return_inverse=True)
    merged = np.bincount(inverse, weights=weights)
    if unique_means.size == 1:
        return 0.5 * math.log2(2.0 * math.pi * math.e * variance)
    sigma = math.sqrt(variance)
    lo = unique_means.min() - 10.0 * sigma
    hi = unique_means.max() + 10.0 * sigma
    intervals = 1024
    previous = _entropy_simpson(unique_means, merged, variance, lo, hi, intervals)
    for _ in range(12):
        intervals *= 2
        current = _entropy_simpson(unique_means, merged, variance, lo, hi, intervals)
        if abs(current - previous) < abs_tol:
            return current
        previous = current
    raise RuntimeError("mixture entropy quadrature did not converge")


def _entropy_simpson(means, weights, variance, lo, hi, intervals) -> float:
    y = np.linspace(lo, hi, intervals + 1)
    f = np.zeros_like(y)
    for mu, w in zip(means, weights):
        f += w * np.exp(-((y - mu) ** 2) / (2.0 * variance))
    f /= math.sqrt(2.0 * math.pi * variance)
    integrand = np.zeros_like(f)
    mask = f > 0
    integrand[mask] = -f[mask] * np.log2(f[mask])
    coeff = np.ones(intervals + 1)
    coeff[1:-1:2] = 4.0
    coeff[2:-1:2] = 2.0
    step = (hi - lo) / intervals
    return float(step / 3.0 * np.dot(coeff, integrand))
