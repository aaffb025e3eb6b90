import math

import numpy as np
import pytest

from opticap.channel import LinkBudget, photons_per_slot_from_budget
from opticap.infotheory import (
    LOG2_E,
    DiscreteLaw,
    GaussianMixtureLaw,
    HybridLaw,
    MiProblem,
    binary_entropy,
    capacity_fock,
    capacity_holevo,
    capacity_shannon_1q,
    capacity_shannon_2q,
    discrete_entropy,
    holevo_advantage,
    mutual_information,
    pie,
    pie_holevo_noisy_limit,
    pie_shannon_limits,
    rate,
    thermal_entropy,
)
from opticap.validate import mc_mutual_information_bpsk_homodyne


def riemann_mixture_mi(input_probs, means_per_input, variance, step=2e-4, span=12.0):
    """Independent fine-grid oracle: I = sum_x p_x int f_x log2(f_x / f)."""
    input_probs = np.asarray(input_probs, float)
    flat_means = [m for means in means_per_input for m in means[0]]
    sigma = math.sqrt(variance)
    lo = min(flat_means) - span * sigma
    hi = max(flat_means) + span * sigma
    y = np.arange(lo, hi, step) + step / 2
    densities = []
    for means, weights in means_per_input:
        f = np.zeros_like(y)
        for mu, w in zip(means, weights):
            f += w * np.exp(-((y - mu) ** 2) / (2 * variance))
        densities.append(f / math.sqrt(2 * math.pi * variance))
    marginal = sum(p * f for p, f in zip(input_probs, densities))
    total = 0.0
    for p, f in zip(input_probs, densities):
        if p == 0:
            continue
        mask = f > 0
        total += p * np.sum(f[mask] * np.log2(f[mask] / marginal[mask])) * step
    return total


class TestThermalEntropy:
    def test_zero(self):
        assert thermal_entropy(0.0) == 0.0

    def test_one(self):
        assert thermal_entropy(1.0) == 2.0

    def test_three(self):
        # 4 log2 4 - 3 log2 3
        assert thermal_entropy(3.0) == pytest.approx(3.245112497836532, abs=1e-12)

    def test_concave_increasing(self):
        # relative step keeps the second difference above the fp noise floor
        for x in np.geomspace(1e-3, 1e3, 200):
            h = 1e-4 * x
            g_minus, g_center, g_plus = (
                thermal_entropy(x - h),
                thermal_entropy(x),
                thermal_entropy(x + h),
            )
            assert (g_plus - g_minus) / (2 * h) > 0
            assert (g_plus - 2 * g_center + g_minus) / h**2 < 0


class TestCapacityShannon:
    def test_1q_values(self):
        assert capacity_shannon_1q(0.0, 0.0) == 0.0
        assert capacity_shannon_1q(0.75, 0.0) == pytest.approx(1.0, abs=1e-15)
        assert capacity_shannon_1q(2.0, 0.0) == pytest.approx(math.log2(3), abs=1e-15)

    def test_2q_values(self):
        assert capacity_shannon_2q(0.0, 5.0) == 0.0
        assert capacity_shannon_2q(1.0, 0.0) == pytest.approx(1.0, abs=1e-15)
        assert capacity_shannon_2q(2.0, 0.0) == pytest.approx(math.log2(3), abs=1e-15)

    def test_crossover_at_two(self):
        # (1 + n_s)^2 = 1 + 4 n_s holds exactly at n_s = 2
        assert capacity_shannon_1q(2.0) == pytest.approx(capacity_shannon_2q(2.0), abs=1e-14)
        for n_s in np.geomspace(0.01, 1.999, 50):
            assert capacity_shannon_1q(n_s) > capacity_shannon_2q(n_s)
        for n_s in np.geomspace(2.001, 100, 50):
            assert capacity_shannon_1q(n_s) < capacity_shannon_2q(n_s)


class TestCapacityHolevo:
    def test_values(self):
        assert capacity_holevo(1.0, 0.0) == 2.0
        assert capacity_holevo(0.0, 3.0) == 0.0
        assert capacity_holevo(1.0, 1.0) == pytest.approx(3 * math.log2(3) - 4, abs=1e-12)

    def test_fock_coincides_with_loss_only_limit(self):
        for n in np.geomspace(1e-3, 1e3, 40):
            assert capacity_fock(n) == pytest.approx(capacity_holevo(n, 0.0), abs=1e-15)

    def test_dominates_shannon_2q_on_grid(self):
        for n_s in np.geomspace(1e-3, 1e3, 25):
            for n_n in [0.0, 0.1, 1.0, 10.0]:
                assert capacity_holevo(n_s, n_n) >= capacity_shannon_2q(n_s, n_n) - 1e-12

    def test_advantage_vanishes_at_high_noise(self):
        gap = capacity_holevo(10.0, 100.0) - capacity_shannon_2q(10.0, 100.0)
        assert 0.0 < gap < 0.02


class TestHolevoAdvantage:
    def test_large_signal_asymptote(self):
        expected = LOG2_E - LOG2_E / 2000.0
        assert holevo_advantage(1e3) == pytest.approx(expected, abs=1e-3)

    def test_limit_value(self):
        assert holevo_advantage(1e8) == pytest.approx(LOG2_E, abs=1e-7)

    def test_unit_signal(self):
        assert holevo_advantage(1.0) == pytest.approx(1.0, abs=1e-15)


class TestPie:
    def test_shannon_asymptotes(self):
        assert pie(capacity_shannon_1q(1e-6), 1e-6) == pytest.approx(2.885390, abs=1e-3)
        assert pie(capacity_shannon_2q(1e-6), 1e-6) == pytest.approx(1.442695, abs=1e-3)

    def test_holevo_log_growth(self):
        expected = math.log2(100) + LOG2_E
        assert pie(capacity_holevo(0.01), 0.01) == pytest.approx(expected, abs=0.02)

    def test_zero_signal_rejected(self):
        with pytest.raises(ValueError):
            pie(1.0, 0.0)

    def test_shannon_limits(self):
        one_q, two_q = pie_shannon_limits(0.0)
        assert one_q == pytest.approx(2.885390, abs=1e-6)
        assert two_q == pytest.approx(1.442695, abs=1e-6)
        one_q, two_q = pie_shannon_limits(0.5)
        assert one_q == pytest.approx(LOG2_E, abs=1e-12)
        assert two_q == pytest.approx(LOG2_E / 1.5, abs=1e-12)
        one_q, two_q = pie_shannon_limits(100.0)
        assert one_q == pytest.approx(two_q, rel=0.01)

    def test_noisy_ceiling(self):
        assert pie_holevo_noisy_limit(1.0) == 1.0
        assert pie_holevo_noisy_limit(1 / 3) == pytest.approx(2.0, abs=1e-12)
        assert pie(capacity_holevo(1e-6, 1.0), 1e-6) == pytest.approx(1.0, abs=1e-3)
        with pytest.raises(ValueError):
            pie_holevo_noisy_limit(0.0)


class TestRate:
    def test_product(self):
        assert rate(1.0, 1e9) == 1e9
        assert rate(0.0, 1e9) == 0.0

    def test_power_limited_holevo_rate(self):
        # B n_s log2(1 + 1/n_n) equals (tau P / h f_c) log2(1 + h f_c / psd)
        budget = LinkBudget(
            power=2e-10, slot_rate=1e9, carrier_frequency=1.936e14, noise_psd=4e-26
        )
        tau = 0.7
        n_s, n_n = photons_per_slot_from_budget(budget, tau)
        via_slots = rate(n_s * pie_holevo_noisy_limit(n_n), budget.slot_rate)
        photon_energy = 6.626e-34 * budget.carrier_frequency
        direct = (tau * budget.power / photon_energy) * math.log2(
            1 + photon_energy / budget.noise_psd
        )
        assert via_slots == pytest.approx(direct, rel=1e-12)

    def test_invalid_slot_rate(self):
        with pytest.raises(ValueError):
            rate(1.0, 0.0)


class TestDiscreteMi:
    def test_noiseless_binary(self):
        problem = MiProblem(
            [0.5, 0.5], (DiscreteLaw([1.0, 0.0]), DiscreteLaw([0.0, 1.0]))
        )
        assert mutual_information(problem) == pytest.approx(1.0, abs=1e-12)

    def test_identical_laws_carry_nothing(self):
        law = DiscreteLaw([0.3, 0.7])
        problem = MiProblem([0.25, 0.75], (law, law))
        assert mutual_information(problem) == pytest.approx(0.0, abs=1e-12)

    def test_binary_symmetric_channel(self):
        eps = 0.11
        problem = MiProblem(
            [0.5, 0.5],
            (DiscreteLaw([1 - eps, eps]), DiscreteLaw([eps, 1 - eps])),
        )
        assert mutual_information(problem) == pytest.approx(
            1.0 - binary_entropy(eps), abs=1e-12
        )

    def test_unnormalized_law_rejected(self):
        with pytest.raises(ValueError):
            DiscreteLaw([0.5, 0.4])

    def test_bad_priors_rejected(self):
        with pytest.raises(ValueError):
            MiProblem([0.5, 0.4], (DiscreteLaw([1.0, 0.0]), DiscreteLaw([0.0, 1.0])))


def bpsk_problem(n_s):
    mean = math.sqrt(2 * n_s)
    return MiProblem(
        [0.5, 0.5],
        (
            GaussianMixtureLaw([mean], [1.0], 0.5),
            GaussianMixtureLaw([-mean], [1.0], 0.5),
        ),
    )


class TestGaussianMixtureMi:
    def test_bpsk_against_riemann(self):
        for n_s in [0.1, 1.0]:
            mean = math.sqrt(2 * n_s)
            oracle = riemann_mixture_mi(
                [0.5, 0.5], [([mean], [1.0]), ([-mean], [1.0])], 0.5
            )
            assert mutual_information(bpsk_problem(n_s)) == pytest.approx(
                oracle, abs=1e-5
            )

    def test_asymmetric_mixture_against_riemann(self):
        laws = (
            GaussianMixtureLaw([0.0, 1.5], [0.4, 0.6], 0.5),
            GaussianMixtureLaw([-1.0], [1.0], 0.5),
        )
        problem = MiProblem([0.3, 0.7], laws)
        oracle = riemann_mixture_mi(
            [0.3, 0.7], [([0.0, 1.5], [0.4, 0.6]), ([-1.0], [1.0])], 0.5
        )
        assert mutual_information(problem) == pytest.approx(oracle, abs=1e-5)

    def test_bpsk_against_monte_carlo(self):
        n_s = 0.1
        quad = mutual_information(bpsk_problem(n_s))
        rng = np.random.default_rng(123)
        estimate, sem = mc_mutual_information_bpsk_homodyne(n_s, 1_000_000, rng)
        assert abs(quad - estimate) <= 3 * sem

    def test_identical_means_carry_nothing(self):
        law = GaussianMixtureLaw([0.7], [1.0], 0.5)
        assert mutual_information(MiProblem([0.5, 0.5], (law, law))) == 0.0

    def test_bounded_by_input_entropy(self):
        priors = [0.2, 0.3, 0.5]
        laws = tuple(
            GaussianMixtureLaw([m], [1.0], 0.5) for m in [-50.0, 0.0, 50.0]
        )
        mi = mutual_information(MiProblem(priors, laws))
        # widely separated means saturate the input entropy
        assert mi == pytest.approx(discrete_entropy(priors), abs=1e-6)
        assert mi <= discrete_entropy(priors) + 1e-12

    def test_mismatched_variance_rejected(self):
        with pytest.raises(ValueError):
            MiProblem(
                [0.5, 0.5],
                (
                    GaussianMixtureLaw([0.0], [1.0], 0.5),
                    GaussianMixtureLaw([1.0], [1.0], 0.6),
                ),
            )


def random_problem(rng, kind):
    n_inputs = rng.integers(2, 5)
    priors = rng.dirichlet(np.ones(n_inputs))
    if kind == "discrete":
        n_out = rng.integers(2, 6)
        laws = tuple(DiscreteLaw(rng.dirichlet(np.ones(n_out))) for _ in range(n_inputs))
        return MiProblem(priors, laws)
    variance = float(rng.uniform(0.2, 2.0))
    if kind == "mixture":
        laws = tuple(
            GaussianMixtureLaw(
                rng.normal(scale=3.0, size=(k := rng.integers(1, 4))),
                rng.dirichlet(np.ones(k)),
                variance,
            )
            for _ in range(n_inputs)
        )
        return MiProblem(priors, laws)
    n_events = rng.integers(2, 5)
    laws = tuple(
        HybridLaw(
            rng.dirichlet(np.ones(n_events)),
            GaussianMixtureLaw(
                rng.normal(scale=3.0, size=(k := rng.integers(1, 4))),
                rng.dirichlet(np.ones(k)),
                variance,
            ),
        )
        for _ in range(n_inputs)
    )
    return MiProblem(priors, laws, refined_event=0)


class TestMiBounds:
    @pytest.mark.parametrize("kind", ["discrete", "mixture", "hybrid"])
    def test_between_zero_and_input_entropy(self, kind):
        rng = np.random.default_rng(hash(kind) % 2**32)
        for _ in range(15):
            problem = random_problem(rng, kind)
            mi = mutual_information(problem)
            assert 0.0 <= mi <= discrete_entropy(problem.input_probs) + 1e-9

    def test_hybrid_refinement_adds_information(self):
        # the refined event separates inputs the events alone cannot
        rng = np.random.default_rng(99)
        for _ in range(10):
            problem = random_problem(rng, "hybrid")
            stripped = MiProblem(
                problem.input_probs,
                tuple(DiscreteLaw(law.event_probs) for law in problem.laws),
            )
            assert mutual_information(problem) >= mutual_information(stripped) - 1e-9


class TestHybridMi:
    def test_reduces_to_discrete_when_refinement_uninformative(self):
        flat = GaussianMixtureLaw([0.0], [1.0], 0.5)
        hybrid = MiProblem(
            [0.5, 0.5],
            (
                HybridLaw([0.9, 0.1], flat),
                HybridLaw([0.2, 0.8], flat),
            ),
            refined_event=0,
        )
        discrete = MiProblem(
            [0.5, 0.5], (DiscreteLaw([0.9, 0.1]), DiscreteLaw([0.2, 0.8]))
        )
        assert mutual_information(hybrid) == pytest.approx(
            mutual_information(discrete), abs=1e-9
        )

    def test_reduces_to_mixture_when_events_constant(self):
        yes = np.array([1.0, 0.0])
        n_s = 0.3
        mean = math.sqrt(2 * n_s)
        hybrid = MiProblem(
            [0.5, 0.5],
            (
                HybridLaw(yes, GaussianMixtureLaw([mean], [1.0], 0.5)),
                HybridLaw(yes, GaussianMixtureLaw([-mean], [1.0], 0.5)),
            ),
            refined_event=0,
        )
        assert mutual_information(hybrid) == pytest.approx(
            mutual_information(bpsk_problem(n_s)), abs=1e-9
        )

    def test_refined_event_required(self):
        flat = GaussianMixtureLaw([0.0], [1.0], 0.5)
        with pytest.raises(ValueError):
            MiProblem([1.0], (HybridLaw([1.0], flat),), refined_event=None)
