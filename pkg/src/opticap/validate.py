"""Seeded Monte Carlo cross-checks of the samplers against the analytic laws.

Each check compares an empirical statistic from a caller-seeded generator
with its analytic value inside a three-standard-error band of the estimator
(the quadrature-covariance check uses the stated 3/sqrt(N) band).  Results
are deterministic for a fixed seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, propagate_sample
from .curves import bpsk_homodyne_mi
from .detection import (
    homodyne_mean,
    sample_dual_quadratures,
    sample_photocounts,
    sample_quadratures,
)

DEFAULT_SEED = 1234
MIN_SAMPLES = 100_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    expected: float
    band: float

    @property
    def passed(self) -> bool:
        return abs(self.measured - self.expected) <= self.band


def _variance_band(variance: float, n: int) -> float:
    # 3 standard errors of the sample variance of a Gaussian.
    return 3.0 * variance * math.sqrt(2.0 / (n - 1))


def mc_mutual_information_bpsk_homodyne(
    n_s: float, samples: int, rng: np.random.Generator
) -> tuple[float, float]:
    """Monte Carlo estimate of the antipodal homodyne information.

    Averages log2 of the likelihood ratio p(y|x)/p(y) over sampled pairs;
    returns (estimate, standard error of the mean).
    """
    mean = math.sqrt(2.0 * n_s)
    sigma = math.sqrt(0.5)
    signs = np.where(rng.random(samples) < 0.5, 1.0, -1.0)
    y = rng.normal(signs * mean, sigma)
    log_cond = -((y - signs * mean) ** 2)  # common Gaussian prefactors cancel
    log_marg = np.logaddexp(-((y - mean) ** 2), -((y + mean) ** 2)) - math.log(2.0)
    values = (log_cond - log_marg) / math.log(2.0)
    return float(values.mean()), float(values.std(ddof=1) / math.sqrt(samples))


def run_validation(seed: int = DEFAULT_SEED, samples: int = 1_000_000) -> list[CheckResult]:
    """Run every sampler-vs-law check; see module docstring for the bands."""
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be at least {MIN_SAMPLES}")
    rng = np.random.default_rng(seed)
    checks: list[CheckResult] = []

    alpha = 1.0 + 0.0j
    y = sample_quadratures(alpha, 0.0, rng, size=samples)
    checks.append(
        CheckResult(
            "homodyne_mean",
            float(y.mean()),
            homodyne_mean(alpha, 0.0),
            3.0 * math.sqrt(0.5 / samples),
        )
    )
    checks.append(
        CheckResult("homodyne_variance", float(y.var(ddof=1)), 0.5, _variance_band(0.5, samples))
    )

    alpha = 3.0 + 4.0j
    y_i, y_q = sample_dual_quadratures(alpha, rng, size=samples)
    checks.append(
        CheckResult(
            "dual_homodyne_variance_i",
            float(y_i.var(ddof=1)),
            0.5,
            _variance_band(0.5, samples),
        )
    )
    checks.append(
        CheckResult(
            "dual_homodyne_variance_q",
            float(y_q.var(ddof=1)),
            0.5,
            _variance_band(0.5, samples),
        )
    )

    alpha = 2.0 + 0.0j
    kbar = abs(alpha) ** 2
    k = sample_photocounts(alpha, rng, size=samples)
    checks.append(
        CheckResult(
            "poisson_mean",
            float(k.mean()),
            kbar,
            3.0 * math.sqrt(kbar / samples),
        )
    )

    n_n = 1.0
    out = propagate_sample(np.zeros(samples, dtype=complex), ChannelParams(1.0, n_n), rng)
    checks.append(
        CheckResult(
            "channel_noise_variance_re",
            float(out.real.var(ddof=1)),
            n_n / 2.0,
            _variance_band(n_n / 2.0, samples),
        )
    )
    checks.append(
        CheckResult(
            "channel_noise_variance_im",
            float(out.imag.var(ddof=1)),
            n_n / 2.0,
            _variance_band(n_n / 2.0, samples),
        )
    )
    covariance = float(np.mean(out.real * out.imag) - out.real.mean() * out.imag.mean())
    checks.append(
        CheckResult(
            "channel_noise_quadrature_covariance",
            covariance,
            0.0,
            3.0 / math.sqrt(samples),
        )
    )

    n_s = 0.1
    estimate, sem = mc_mutual_information_bpsk_homodyne(n_s, samples, rng)
    checks.append(
        CheckResult(
            "mi_bpsk_homodyne_mc_vs_quadrature",
            estimate,
            bpsk_homodyne_mi(n_s),
            3.0 * sem,
        )
    )
    return checks
