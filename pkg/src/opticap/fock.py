"""Truncated photon-number-basis numerics.

Coherent states are expanded over Fock states |0>, ..., |cutoff> with
coefficients c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), computed in log space
so large amplitudes stay finite.  Mixing the pure output states of a
loss-only channel gives a density matrix whose von Neumann entropy equals the
accessible-information bound (Holevo quantity) of the ensemble, since the
conditional-entropy term vanishes for pure states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from .channel import ChannelParams, Constellation
from .infotheory import binary_entropy

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-9
_EIGENVALUE_FLOOR = -1e-10
_MIN_CUTOFF = 16


def required_cutoff(mean_photons: float) -> int:
    """Smallest truncation this module accepts for a state of given energy.

    The rule mean + 10 sqrt(mean + 1) + 10 keeps the truncated norm deficit
    far below 1e-12.
    """
    return math.ceil(mean_photons + 10.0 * math.sqrt(mean_photons + 1.0) + 10.0)


def choose_cutoff(max_mean_photons: float, tail_tol: float) -> int:
    """Smallest cutoff whose Poisson tail mass is below tail_tol, at least 16.

    The photon-number distribution of a coherent state with mean photon
    number m is Poisson(m), so the probability mass lost to truncation at
    cutoff K is the Poisson tail beyond K.
    """
    if max_mean_photons < 0:
        raise ValueError("max_mean_photons must be nonnegative")
    if not 0.0 < tail_tol < 1.0:
        raise ValueError("tail_tol must lie in (0, 1)")
    cutoff = _MIN_CUTOFF
    while poisson.sf(cutoff, max_mean_photons) >= tail_tol:
        cutoff += 1
    return cutoff


@dataclass(frozen=True)
class FockVector:
    """Photon-number coefficients of a (possibly truncated) pure state."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.atleast_1d(np.asarray(self.amplitudes, dtype=complex))
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if not 1.0 - 1e-10 <= norm_sq <= 1.0 + 1e-12:
            raise ValueError(
                f"squared norm {norm_sq!r} outside [1 - 1e-10, 1]; cutoff too small"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def cutoff(self) -> int:
        return self.amplitudes.size - 1


def _coherent_amplitudes(alpha: complex, cutoff: int) -> np.ndarray:
    """Unvalidated coefficient vector of |alpha> over photon numbers 0..cutoff."""
    n = np.arange(cutoff + 1)
    alpha = complex(alpha)
    r2 = abs(alpha) ** 2
    if r2 == 0.0:
        out = np.zeros(cutoff + 1, dtype=complex)
        out[0] = 1.0
        return out
    log_mag = -0.5 * r2 + 0.5 * n * math.log(r2) - 0.5 * gammaln(n + 1)
    phases = np.exp(1j * n * np.angle(alpha))
    return np.exp(log_mag) * phases


def coherent_state(alpha: complex, cutoff: int) -> FockVector:
    """Truncated coherent-state vector; rejects cutoffs too small for |alpha|^2."""
    mean = abs(complex(alpha)) ** 2
    minimum = required_cutoff(mean)
    if cutoff < minimum:
        raise ValueError(
            f"cutoff {cutoff} too small for mean photon number {mean}; need >= {minimum}"
        )
    return FockVector(_coherent_amplitudes(alpha, cutoff))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix over the truncated photon-number basis."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("density matrix must be square")
        deviation = np.abs(entries - entries.conj().T).max()
        if deviation > _HERMITICITY_TOL:
            raise ValueError(f"matrix not Hermitian, max deviation {deviation!r}")
        trace = entries.trace().real
        if abs(trace - 1.0) > _TRACE_TOL:
            raise ValueError(
                f"trace {trace!r} deviates from 1 by more than 1e-9; "
                "for truncated ensembles this signals an insufficient cutoff"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pure(cls, state: FockVector) -> "DensityMatrix":
        v = state.amplitudes
        return cls(np.outer(v, v.conj()))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-Tr(rho log2 rho) via eigendecomposition of the symmetrized matrix.

    Eigenvalues in [-1e-10, 0) are clipped to zero; anything more negative is
    rejected as an invalid state.
    """
    m = rho.entries
    eigenvalues = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    if eigenvalues.min() < _EIGENVALUE_FLOOR:
        raise ValueError(
            f"eigenvalue {eigenvalues.min()!r} below the numerical floor; not a state"
        )
    eigenvalues = eigenvalues[eigenvalues > 0]
    if eigenvalues.size == 0:
        return 0.0
    return float(-(eigenvalues * np.log2(eigenvalues)).sum())


def holevo_chi(ensemble: Constellation, params: ChannelParams, cutoff: int) -> float:
    """Accessible-information bound for a coherent-state ensemble after loss.

    Restricted to loss-only propagation (n_n = 0), where the channel maps
    each |alpha> to the pure state |sqrt(tau) alpha>.  The bound is then the
    entropy of the mixed output state alone; the average entropy of the
    individual (pure) outputs is identically zero.  An insufficient cutoff is
    caught by the unit-trace check on the assembled density matrix.
    """
    if params.n_n != 0:
        raise ValueError(
            "holevo_chi handles loss-only propagation; for noisy channels use "
            "capacity_holevo for the ensemble-optimized limit"
        )
    scaled = math.sqrt(params.tau) * ensemble.amplitudes
    vectors = np.vstack([_coherent_amplitudes(a, cutoff) for a in scaled])
    rho = (vectors.T * ensemble.probabilities) @ vectors.conj()
    return von_neumann_entropy(DensityMatrix(rho))


def chi_bpsk_closed_form(n_s: float) -> float:
    """Accessible-information bound of the antipodal pair +/- sqrt(n_s).

    The two-state mixture has eigenvalues (1 +/- |<a|-a>|)/2 with overlap
    e^{-2 n_s}, so the bound is the binary entropy of (1 - e^{-2 n_s})/2.
    """
    if n_s < 0:
        raise ValueError("n_s must be nonnegative")
    return binary_entropy(-math.expm1(-2.0 * n_s) / 2.0)


def chi_gaussian_discretized(
    n_s: float, radial_nodes: int, angular_nodes: int, cutoff: int
) -> float:
    """Holevo quantity of a polar-grid discretized circular Gaussian ensemble.

    The target ensemble draws alpha ~ CN(0, n_s) (already after loss-only
    propagation).  Writing alpha = r e^{i theta} and substituting u = r^2/n_s
    makes the radial density e^{-u}, integrated with Gauss-Laguerre nodes and
    weights; phases are uniform.  As the node counts and the cutoff grow the
    result converges to the thermal entropy g(n_s).
    """
    if n_s < 0:
        raise ValueError("n_s must be nonnegative")
    if radial_nodes < 8 or angular_nodes < 8:
        raise ValueError("need at least 8 radial and 8 angular nodes")
    u, w = np.polynomial.laguerre.laggauss(radial_nodes)
    radii = np.sqrt(n_s * u)
    angles = 2.0 * math.pi * np.arange(angular_nodes) / angular_nodes
    amplitudes = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    probabilities = np.repeat(w / angular_nodes, angular_nodes)
    probabilities = probabilities / probabilities.sum()
    ensemble = Constellation(amplitudes, probabilities)
    return holevo_chi(ensemble, ChannelParams(1.0, 0.0), cutoff)
