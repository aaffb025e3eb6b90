"""Discrete-slot optical signal model.

The signal is a train of orthogonal pulses, one per temporal slot of duration
1/B, each carrying a complex amplitude alpha whose squared modulus is the mean
photon number of the pulse.  Propagation acts slot by slot as

    alpha -> sqrt(tau) * alpha + zeta,      zeta ~ CN(0, n_n),

where tau is the power transmission coefficient and n_n the mean number of
excess-noise photons added per slot.  This module holds the parameter records,
the stochastic slot transformation, and the conversions between physical link
parameters and the dimensionless photon numbers (n_s, n_n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Planck constant in J*s, quoted to four significant digits.  Kept at this
# precision on purpose so that photon-number conversions match the customary
# hand calculation.
PLANCK_H = 6.626e-34


@dataclass(frozen=True)
class ChannelParams:
    """Transmission coefficient and excess-noise photon number per slot.

    An amplifying channel (tau > 1) cannot be noiseless: quantum mechanics
    requires n_n >= tau - 1, which is enforced at construction.
    """

    tau: float
    n_n: float = 0.0

    def __post_init__(self) -> None:
        if self.tau < 0:
            raise ValueError(f"tau must be nonnegative, got {self.tau}")
        if self.n_n < 0:
            raise ValueError(f"n_n must be nonnegative, got {self.n_n}")
        if self.tau > 1 and self.n_n < self.tau - 1:
            raise ValueError(
                f"amplification with tau={self.tau} requires n_n >= tau - 1 "
                f"= {self.tau - 1}, got n_n={self.n_n}"
            )


@dataclass(frozen=True)
class Constellation:
    """Weighted set of complex slot amplitudes (symbols with probabilities)."""

    amplitudes: np.ndarray
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        amps = np.atleast_1d(np.asarray(self.amplitudes, dtype=complex))
        probs = np.atleast_1d(np.asarray(self.probabilities, dtype=float))
        if amps.size == 0:
            raise ValueError("constellation needs at least one symbol")
        if amps.shape != probs.shape:
            raise ValueError("amplitudes and probabilities must have equal length")
        if np.any(probs < 0):
            raise ValueError("symbol probabilities must be nonnegative")
        if abs(probs.sum() - 1.0) > 1e-12:
            raise ValueError(
                f"symbol probabilities must sum to 1 within 1e-12, got {probs.sum()!r}"
            )
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def bpsk(cls, mean_photons: float) -> "Constellation":
        """Equiprobable antipodal pair +/- sqrt(mean_photons)."""
        if mean_photons < 0:
            raise ValueError("mean_photons must be nonnegative")
        a = math.sqrt(mean_photons)
        return cls(np.array([a, -a], dtype=complex), np.array([0.5, 0.5]))


@dataclass(frozen=True)
class LinkBudget:
    """Physical link parameters in SI units.

    power is the optical power relevant to the context (received power when
    computing n_s through a given tau), slot_rate is B in Hz, noise_psd the
    excess-noise power spectral density in W/Hz.  The narrowband assumption
    B << carrier_frequency is documented but not enforced.
    """

    power: float
    slot_rate: float
    carrier_frequency: float
    noise_psd: float = 0.0

    def __post_init__(self) -> None:
        if self.power <= 0:
            raise ValueError("power must be positive")
        if self.slot_rate <= 0:
            raise ValueError("slot_rate must be positive")
        if self.carrier_frequency <= 0:
            raise ValueError("carrier_frequency must be positive")
        if self.noise_psd < 0:
            raise ValueError("noise_psd must be nonnegative")


def mean_photon_number(constellation: Constellation) -> float:
    """Average photon number per slot, sum of p_x |alpha_x|^2."""
    return float(
        np.sum(constellation.probabilities * np.abs(constellation.amplitudes) ** 2)
    )


def received_mean_photons(nbar: float, params: ChannelParams) -> float:
    """Mean received signal photons per slot, n_s = tau * nbar."""
    if nbar < 0:
        raise ValueError("nbar must be nonnegative")
    return params.tau * nbar


def photons_per_slot_from_budget(budget: LinkBudget, tau: float) -> tuple[float, float]:
    """Dimensionless (n_s, n_n) for a physical link.

    n_s = tau * P / (B h f_c) and n_n = noise_psd / (h f_c), i.e. signal and
    noise energies measured against the energy h f_c of one carrier photon.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    photon_energy = PLANCK_H * budget.carrier_frequency
    n_s = tau * budget.power / (budget.slot_rate * photon_energy)
    n_n = budget.noise_psd / photon_energy
    return n_s, n_n


def propagate_sample(alpha, params: ChannelParams, rng: np.random.Generator):
    """One stochastic pass of the slot transformation.

    Returns sqrt(tau)*alpha + zeta where zeta is complex Gaussian noise with
    independent real and imaginary parts of variance n_n/2 each, drawn as two
    normal deviates from the caller-owned generator.  ``alpha`` may be a
    scalar or an array of slot amplitudes; the output matches its shape.
    With n_n = 0 the output is exactly sqrt(tau)*alpha.
    """
    arr = np.asarray(alpha, dtype=complex)
    scale = math.sqrt(params.n_n / 2.0)
    zeta = rng.normal(0.0, scale, size=arr.shape) + 1j * rng.normal(
        0.0, scale, size=arr.shape
    )
    out = math.sqrt(params.tau) * arr + zeta
    if arr.ndim == 0:
        return complex(out)
    return out


def sinc_orthogonality(j: int, window: float = 200.0, step: float = 0.01) -> float:
    """Overlap integral of the sinc pulse with its j-slot displaced replica.

    Evaluates the integral of sinc(s - j) * sinc(s) with the trapezoidal rule
    on [-window, window].  For orthogonal slot pulses the result approximates
    the Kronecker delta at j = 0; with the default window and step the
    residual is below 1e-3.
    """
    if window < 200:
        raise ValueError("window must be at least 200 for the stated accuracy")
    if step > 0.01:
        raise ValueError("step must be at most 0.01 for the stated accuracy")
    s = np.arange(-window, window + step / 2, step)
    return float(np.trapezoid(np.sinc(s - j) * np.sinc(s), s))
