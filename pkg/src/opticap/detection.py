"""Shot-noise-level statistics of the three conventional optical receivers.

Conditional on the post-channel slot amplitude alpha, the outcome laws are

  direct detection:   photocount k ~ Poisson(|alpha|^2)
  single homodyne:    y ~ N(sqrt(2) Re(e^{-i phase} alpha), 1/2)
  dual homodyne:      (y_i, y_q) ~ N((Re alpha, Im alpha), diag(1/2, 1/2))

The quadrature variance 1/2 and the Poisson variance are the shot-noise
floors of ideal photodetection; detection knows nothing about the channel
parameters.  Samplers draw from caller-owned numpy generators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhotocountOutcome:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("photocount must be nonnegative")


@dataclass(frozen=True)
class QuadratureOutcome:
    y: float
    phase: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % _TWO_PI)


@dataclass(frozen=True)
class DualQuadratureOutcome:
    y_i: float
    y_q: float


@dataclass(frozen=True)
class Direct:
    """Ideal photon-counting receiver."""


@dataclass(frozen=True)
class Homodyne:
    """Single-quadrature homodyne receiver with local-oscillator phase."""

    phase: float = 0.0


@dataclass(frozen=True)
class DualHomodyne:
    """Phase-diversity receiver measuring both quadratures at once."""


DetectionModel = Direct | Homodyne | DualHomodyne


def direct_detection_pmf(alpha_out: complex, k: int) -> float:
    """Poisson probability of k photocounts for mean |alpha_out|^2.

    Evaluated in log space so large means do not overflow.
    """
    if k < 0:
        raise ValueError("photocount must be nonnegative")
    kbar = abs(alpha_out) ** 2
    if kbar == 0.0:
        return 1.0 if k == 0 else 0.0
    return math.exp(k * math.log(kbar) - kbar - math.lgamma(k + 1))


def homodyne_mean(alpha_out: complex, phase: float) -> float:
    """Expected quadrature value sqrt(2) Re(e^{-i phase} alpha)."""
    return math.sqrt(2.0) * (complex(alpha_out) * cmath.exp(-1j * phase)).real


def homodyne_pdf(alpha_out: complex, phase: float, y):
    """Density of the single-quadrature outcome; Gaussian with variance 1/2."""
    mean = homodyne_mean(alpha_out, phase)
    val = np.exp(-((np.asarray(y, dtype=float) - mean) ** 2)) / math.sqrt(math.pi)
    return float(val) if np.ndim(y) == 0 else val


def dual_homodyne_pdf(alpha_out: complex, y_i, y_q):
    """Joint density of the two-quadrature outcome; marginals have variance 1/2."""
    a = complex(alpha_out)
    val = (
        np.exp(
            -((np.asarray(y_i, dtype=float) - a.real) ** 2)
            - (np.asarray(y_q, dtype=float) - a.imag) ** 2
        )
        / math.pi
    )
    return float(val) if np.ndim(y_i) == 0 and np.ndim(y_q) == 0 else val


def sample_photocounts(alpha_out: complex, rng: np.random.Generator, size=None):
    """Poisson photocount draws with mean |alpha_out|^2."""
    return rng.poisson(abs(alpha_out) ** 2, size=size)


def sample_quadratures(
    alpha_out: complex, phase: float, rng: np.random.Generator, size=None
):
    """Homodyne outcome draws, N(sqrt(2) Re(e^{-i phase} alpha), 1/2)."""
    return rng.normal(homodyne_mean(alpha_out, phase), math.sqrt(0.5), size=size)


def sample_dual_quadratures(alpha_out: complex, rng: np.random.Generator, size=None):
    """Dual-homodyne outcome draws, a pair of N(Re alpha, 1/2), N(Im alpha, 1/2)."""
    a = complex(alpha_out)
    sigma = math.sqrt(0.5)
    return rng.normal(a.real, sigma, size=size), rng.normal(a.imag, sigma, size=size)


def sample_detection(
    model: DetectionModel, alpha_out: complex, rng: np.random.Generator
) -> PhotocountOutcome | QuadratureOutcome | DualQuadratureOutcome:
    """Draw one detection outcome for the given receiver model."""
    if isinstance(model, Direct):
        return PhotocountOutcome(int(sample_photocounts(alpha_out, rng)))
    if isinstance(model, Homodyne):
        y = float(sample_quadratures(alpha_out, model.phase, rng))
        return QuadratureOutcome(y, model.phase)
    if isinstance(model, DualHomodyne):
        y_i, y_q = sample_dual_quadratures(alpha_out, rng)
        return DualQuadratureOutcome(float(y_i), float(y_q))
    raise TypeError(f"unknown detection model: {model!r}")
