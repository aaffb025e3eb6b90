import math

import numpy as np
import pytest
from scipy import stats

from opticap.detection import (
    Direct,
    DualHomodyne,
    DualQuadratureOutcome,
    Homodyne,
    PhotocountOutcome,
    QuadratureOutcome,
    direct_detection_pmf,
    dual_homodyne_pdf,
    homodyne_mean,
    homodyne_pdf,
    sample_detection,
    sample_dual_quadratures,
    sample_photocounts,
    sample_quadratures,
)


class TestDirectDetectionPmf:
    def test_vacuum_never_clicks(self):
        assert direct_detection_pmf(0.0, 0) == 1.0
        assert direct_detection_pmf(0.0, 3) == 0.0

    def test_single_photon_mean(self):
        assert direct_detection_pmf(1.0, 0) == pytest.approx(math.exp(-1), rel=1e-12)

    def test_click_probability(self):
        # P(k >= 1) = 1 - e^{-0.2} for mean photon number 0.2
        alpha = math.sqrt(0.2)
        assert 1.0 - direct_detection_pmf(alpha, 0) == pytest.approx(
            -math.expm1(-0.2), rel=1e-12
        )

    @pytest.mark.parametrize("kbar", [0.5, 4.0, 100.0, 1000.0])
    def test_pmf_sums_to_one(self, kbar):
        alpha = math.sqrt(kbar)
        k_max = int(kbar + 20 * math.sqrt(kbar) + 50)
        total = sum(direct_detection_pmf(alpha, k) for k in range(k_max + 1))
        assert total == pytest.approx(1.0, abs=1e-9)

    def test_large_mean_does_not_overflow(self):
        val = direct_detection_pmf(math.sqrt(1e6), 1_000_000)
        assert 0.0 < val < 1.0

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            direct_detection_pmf(1.0, -1)


class TestHomodynePdf:
    def test_vacuum_peak(self):
        assert homodyne_pdf(0.0, 0.0, 0.0) == pytest.approx(1 / math.sqrt(math.pi))

    def test_mean_is_sqrt2(self):
        assert homodyne_mean(1.0, 0.0) == pytest.approx(math.sqrt(2.0))

    def test_phase_rotation_reads_q_quadrature(self):
        assert homodyne_mean(1.0j, math.pi / 2) == pytest.approx(math.sqrt(2.0))

    @pytest.mark.parametrize("alpha,phase", [(0.0, 0.0), (1.5 - 0.5j, 0.7), (2.0j, 2.0)])
    def test_normalization(self, alpha, phase):
        mean = homodyne_mean(alpha, phase)
        sigma = math.sqrt(0.5)
        y = np.linspace(mean - 12 * sigma, mean + 12 * sigma, 200_001)
        total = np.trapezoid(homodyne_pdf(alpha, phase, y), y)
        assert total == pytest.approx(1.0, abs=1e-9)

    def test_variance_is_half(self):
        y = np.linspace(-10, 10, 400_001)
        f = homodyne_pdf(0.0, 0.0, y)
        assert np.trapezoid(f * y**2, y) == pytest.approx(0.5, abs=1e-9)


class TestDualHomodynePdf:
    def test_vacuum_peak(self):
        assert dual_homodyne_pdf(0.0, 0.0, 0.0) == pytest.approx(1 / math.pi)

    def test_mean_at_amplitude(self):
        # peak sits at (Re alpha, Im alpha)
        assert dual_homodyne_pdf(3 + 4j, 3.0, 4.0) == pytest.approx(1 / math.pi)

    @pytest.mark.parametrize("alpha", [0.0, 3 + 4j, -1.5j])
    def test_marginal_variances_half(self, alpha):
        a = complex(alpha)
        u = np.linspace(-9, 9, 100_001)
        f_i = dual_homodyne_pdf(alpha, a.real + u, np.full_like(u, a.imag))
        # slice through the peak is Gaussian in each coordinate; integrate moments
        norm = np.trapezoid(f_i, u)
        assert np.trapezoid(f_i * u**2, u) / norm == pytest.approx(0.5, abs=1e-9)

    def test_joint_normalization(self):
        u = np.linspace(-8, 8, 2001)
        yy_i, yy_q = np.meshgrid(u, u)
        f = dual_homodyne_pdf(1 - 1j, yy_i + 1.0, yy_q - 1.0)
        total = np.trapezoid(np.trapezoid(f, u, axis=1), u)
        assert total == pytest.approx(1.0, abs=1e-9)


class TestSamplers:
    def test_direct_vacuum_always_zero(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            outcome = sample_detection(Direct(), 0.0, rng)
            assert isinstance(outcome, PhotocountOutcome)
            assert outcome.k == 0

    def test_homodyne_moments(self):
        n = 1_000_000
        rng = np.random.default_rng(11)
        y = sample_quadratures(1.0, 0.0, rng, size=n)
        assert y.mean() == pytest.approx(math.sqrt(2.0), abs=0.01)
        assert y.var() == pytest.approx(0.5, abs=0.01)

    def test_poisson_mean(self):
        n = 1_000_000
        rng = np.random.default_rng(12)
        k = sample_photocounts(2.0, rng, size=n)
        assert k.mean() == pytest.approx(4.0, abs=0.02)

    def test_dual_homodyne_moments(self):
        n = 1_000_000
        rng = np.random.default_rng(13)
        y_i, y_q = sample_dual_quadratures(3 + 4j, rng, size=n)
        assert y_i.mean() == pytest.approx(3.0, abs=0.01)
        assert y_q.mean() == pytest.approx(4.0, abs=0.01)
        assert y_i.var() == pytest.approx(0.5, abs=0.01)
        assert y_q.var() == pytest.approx(0.5, abs=0.01)

    def test_outcome_types(self):
        rng = np.random.default_rng(2)
        assert isinstance(sample_detection(Homodyne(0.3), 1.0, rng), QuadratureOutcome)
        assert isinstance(sample_detection(DualHomodyne(), 1.0, rng), DualQuadratureOutcome)

    def test_quadrature_phase_normalized(self):
        rng = np.random.default_rng(3)
        outcome = sample_detection(Homodyne(7.0), 1.0, rng)
        assert 0.0 <= outcome.phase < 2 * math.pi

    def test_homodyne_histogram_matches_law(self):
        rng = np.random.default_rng(21)
        samples = [sample_detection(Homodyne(0.0), 0.5, rng).y for _ in range(20_000)]
        mean = homodyne_mean(0.5, 0.0)
        result = stats.kstest(samples, "norm", args=(mean, math.sqrt(0.5)))
        assert result.pvalue > 1e-3

    def test_direct_histogram_matches_law(self):
        rng = np.random.default_rng(22)
        alpha = math.sqrt(3.0)
        counts = np.bincount(sample_photocounts(alpha, rng, size=50_000), minlength=16)
        expected = 50_000 * np.array(
            [direct_detection_pmf(alpha, k) for k in range(counts.size)]
        )
        # merge the sparse tail into one bin for a valid chi-square
        observed = np.append(counts[:10], counts[10:].sum())
        expected = np.append(expected[:10], 50_000 - expected[:10].sum())
        result = stats.chisquare(observed, expected)
        assert result.pvalue > 1e-3

    def test_noisy_channel_composition(self):
        # excess noise enters direct detection through channel propagation:
        # E[k] = E[|alpha'|^2] = tau |alpha|^2 + n_n
        from opticap.channel import ChannelParams, propagate_sample

        n = 400_000
        rng = np.random.default_rng(31)
        tau, n_n, alpha = 0.6, 0.8, 1.5 + 0.5j
        out = propagate_sample(np.full(n, alpha), ChannelParams(tau, n_n), rng)
        counts = rng.poisson(np.abs(out) ** 2)
        expected = tau * abs(alpha) ** 2 + n_n
        assert counts.mean() == pytest.approx(expected, abs=0.02)

    def test_dual_homodyne_snr_penalty(self):
        # same amplitude: dual readout halves |mean|^2 / variance
        alpha = 1.3 + 0.0j
        n = 200_000
        rng = np.random.default_rng(23)
        y = sample_quadratures(alpha, 0.0, rng, size=n)
        y_i, _ = sample_dual_quadratures(alpha, rng, size=n)
        snr_single = y.mean() ** 2 / y.var()
        snr_dual = y_i.mean() ** 2 / y_i.var()
        assert snr_dual / snr_single == pytest.approx(0.5, abs=0.02)
