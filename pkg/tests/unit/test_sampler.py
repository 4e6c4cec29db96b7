"""Unit tests for sample-size formulas, budgets, bounds and the sampling framework."""

import math

import numpy as np
import pytest

from sampleclust.core import OUTLIER, Dataset, objective_with_outliers
from sampleclust.datagen.synthetic import SyntheticSpec, gen_synthetic
from sampleclust.errors import ConfigurationError, InputError
from sampleclust.harness.metrics import precision, purity
from sampleclust.sampler import (
    FrameworkConfig,
    SampleBudget,
    SignificanceParams,
    Variant,
    boosted_success,
    budget_extra,
    direct_budget,
    parse_sample_size,
    run_framework,
    runs_for_success,
    sample_size_alg1,
    sample_size_concentration,
    sample_size_means,
    success_probability,
    theorem_bounds,
    uniform_sample,
)
from sampleclust.selector import boosted_run
from sampleclust.subroutines import IterConfig


def _labeled(sizes: list[int], outliers: int) -> Dataset:
    labels = np.concatenate(
        [np.full(s, j, dtype=np.int64) for j, s in enumerate(sizes)] + [np.full(outliers, OUTLIER, dtype=np.int64)]
    )
    points = np.arange(labels.shape[0], dtype=np.float64).reshape(-1, 1)
    return Dataset(points=points, labels=labels)


class TestSampleSizeFormulas:
    """Tests for the closed-form sample sizes."""

    def test_alg1(self) -> None:
        """Test ceil((k / epsilon1) ln(k / eta))."""
        assert sample_size_alg1(8, 0.8, 0.5) == 28
        assert sample_size_alg1(1, 0.5, 0.5) == 2

    def test_alg1_nonpositive_log(self) -> None:
        """Test eta >= k falls back to max(1, k)."""
        assert sample_size_alg1(1, 0.5, 1.0) == 1

    def test_concentration(self) -> None:
        """Test ceil((3k / (delta^2 epsilon1)) ln(2k / eta))."""
        assert sample_size_concentration(8, 0.8, 0.5, 0.5) == 416
        assert sample_size_concentration(2, 0.5, 0.5, 0.5) == 100

    def test_concentration_monotone_in_delta(self) -> None:
        """Test a larger delta never increases the sample size."""
        sizes = [sample_size_concentration(8, 0.8, d, 0.5) for d in (0.2, 0.5, 0.8, 0.95)]
        assert sizes == sorted(sizes, reverse=True)

    def test_means(self) -> None:
        """Test the max of the concentration and additive-error terms."""
        # second term: 1000 * ln 32
        assert sample_size_means(8, 0.8, 0.5, 0.1, 0.5) == 3466

    def test_means_first_term_wins(self) -> None:
        """Test the concentration term dominates for a large xi."""
        assert sample_size_means(8, 0.8, 0.5, 0.9, 0.5) == sample_size_concentration(8, 0.8, 0.5, 0.5)

    def test_budget_extra(self) -> None:
        """Test (1 / eta)(epsilon2 / k)|S| rounded up."""
        assert budget_extra(0.5, 0.16, 8, 2000) == 80
        assert budget_extra(0.5, 0.0, 8, 2000) == 0
        assert budget_extra(1.0, 0.16, 8, 2000) == 40


class TestSignificanceParams:
    """Tests for the parameter model."""

    def test_t(self) -> None:
        """Test t = eta (1 - delta) epsilon1 / epsilon2."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.5)
        assert params.ratio == pytest.approx(6.0)
        assert params.t == pytest.approx(1.5)
        assert params.satisfies_center_condition()
        assert params.satisfies_means_condition()

    def test_condition_fails(self) -> None:
        """Test a low significance ratio fails both variant II conditions."""
        params = SignificanceParams(epsilon1=0.3, epsilon2=0.16, eta=0.5, delta=0.5)
        assert not params.satisfies_center_condition()
        assert not params.satisfies_means_condition()

    @pytest.mark.parametrize("field", ["epsilon1", "eta", "delta", "xi"])
    def test_out_of_range(self, field: str) -> None:
        """Test values outside (0, 1) are rejected."""
        values = {"epsilon1": 0.5, "epsilon2": 0.1, "eta": 0.5, "delta": 0.5, "xi": 0.1}
        values[field] = 1.0
        with pytest.raises(ConfigurationError):
            SignificanceParams(**values)

    def test_from_instance(self) -> None:
        """Test realized epsilons."""
        params = SignificanceParams.from_instance(n=1000, k=4, z=20, min_cluster_size=120, eta=0.2)
        assert params.epsilon1 == pytest.approx(0.48)
        assert params.epsilon2 == pytest.approx(0.08)


class TestBudgets:
    """Tests for direct-mode budget resolution."""

    def test_percent_of_n(self) -> None:
        """Test percentage, fraction and absolute sizes."""
        assert parse_sample_size("2%n", 100_000) == 2000
        assert parse_sample_size("2%", 100_000) == 2000
        assert parse_sample_size(0.02, 100_000) == 2000
        assert parse_sample_size("150", 100_000) == 150
        assert parse_sample_size(3.0, 100_000) == 3

    @pytest.mark.parametrize("value", [0, -5, 1.5, "abc"])
    def test_invalid_size(self, value) -> None:
        """Test nonpositive, out-of-range and unparseable sizes."""
        with pytest.raises(ConfigurationError):
            parse_sample_size(value, 1000)

    def test_variant_i_tau(self) -> None:
        """Test k' = round((tau - 1) k)."""
        assert direct_budget(1000, 8, 20, "I", "2%n", tau=2.0) == SampleBudget(20, 8)
        assert direct_budget(1000, 6, 20, "I", 100, tau=4 / 3) == SampleBudget(100, 2)
        assert direct_budget(1000, 6, 20, "I", 100, tau=1.0) == SampleBudget(100, 0)

    def test_variant_ii_ratio(self) -> None:
        """Test z' = ceil(ratio * z * |S| / n)."""
        assert direct_budget(100_000, 8, 2000, "II", "2%n", outlier_ratio=2.0) == SampleBudget(2000, 80)
        assert direct_budget(100_000, 8, 2000, "II", "2%n", outlier_ratio=1.1) == SampleBudget(2000, 44)

    def test_explicit_extra_wins(self) -> None:
        """Test an explicit extra overrides tau and ratio."""
        assert direct_budget(1000, 8, 20, "II", 50, extra=7, outlier_ratio=9.0) == SampleBudget(50, 7)

    def test_tau_below_one(self) -> None:
        """Test tau < 1 is a configuration error."""
        with pytest.raises(ConfigurationError):
            direct_budget(1000, 8, 20, "I", 50, tau=0.5)

    def test_variant_parse(self) -> None:
        """Test roman and arabic variant names."""
        assert Variant.parse("2") is Variant.II
        assert Variant.parse("i") is Variant.I
        with pytest.raises(InputError):
            Variant.parse("III")


class TestFrameworkConfig:
    """Tests for framework configuration."""

    def test_exactly_one_mode(self) -> None:
        """Test budget and params are mutually exclusive and one is required."""
        with pytest.raises(ConfigurationError):
            FrameworkConfig(variant="I", kind="means", k=3)
        with pytest.raises(ConfigurationError):
            FrameworkConfig(
                variant="I",
                kind="means",
                k=3,
                budget=SampleBudget(10),
                params=SignificanceParams(0.5, 0.1, 0.5),
            )

    @pytest.mark.parametrize(
        "variant,kind,number",
        [("I", "center", 1), ("II", "center", 2), ("I", "means", 3), ("II", "median", 4)],
    )
    def test_algorithm_number(self, variant: str, kind: str, number: int) -> None:
        """Test the four algorithms."""
        cfg = FrameworkConfig(variant=variant, kind=kind, k=2, budget=SampleBudget(10))
        assert cfg.algorithm == number

    def test_theory_mode_sizes(self) -> None:
        """Test theory mode applies the formulas."""
        params = SignificanceParams(epsilon1=0.8, epsilon2=0.16, eta=0.5, delta=0.5, xi=0.1)
        cfg = FrameworkConfig(variant="I", kind="center", k=8, z=2000, params=params)
        budget, warnings = cfg.resolve_budget()
        assert budget.sample_size == 28
        assert budget.extra == budget_extra(0.5, 0.16, 8, 28)
        assert warnings == []

    def test_theory_mode_warning(self) -> None:
        """Test a failed precondition becomes a warning, not an error."""
        params = SignificanceParams(epsilon1=0.3, epsilon2=0.16, eta=0.5, delta=0.5)
        cfg = FrameworkConfig(variant="II", kind="means", k=8, z=2000, params=params)
        _, warnings = cfg.resolve_budget()
        assert len(warnings) == 1
        assert "t=" in warnings[0]


class TestBounds:
    """Tests for approximation factors and success probabilities."""

    def test_center_factors(self) -> None:
        """Test 4 for variant I and c + 2 for variant II."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5)
        assert theorem_bounds("I", "center", params).factor == 4.0
        bound = theorem_bounds("II", "center", params, c=3.0)
        assert bound.factor == 5.0
        assert bound.probability == 0.25

    def test_means_constants(self) -> None:
        """Test alpha = 2 + beta and beta = (4 + 4c)(1 + delta)/(1 - delta)."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.5)
        bound = theorem_bounds("I", "means", params, c=1.0)
        assert bound.additive == pytest.approx(24.0)
        assert bound.factor == pytest.approx(26.0)
        assert bound.probability == pytest.approx(0.125)

    def test_variant_ii_means_scaled(self) -> None:
        """Test the t / (t - 1) factor scales beta but not the leading 2."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.5)
        bound = theorem_bounds("II", "means", params, c=1.0)
        assert bound.additive == pytest.approx(24.0 * 3.0)
        assert bound.factor == pytest.approx(2.0 + 24.0 * 3.0)

    @pytest.mark.parametrize("variant,factor,additive", [("I", 7.0, 6.0), ("II", 19.0, 18.0)])
    def test_median_constants(self, variant: str, factor: float, additive: float) -> None:
        """Test alpha = 1 + beta and beta = (1 + c)(1 + delta)/(1 - delta) for k-median."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.5)
        bound = theorem_bounds(variant, "median", params, c=1.0)
        assert bound.factor == pytest.approx(factor)
        assert bound.additive == pytest.approx(additive)
        assert bound.diameter_power == 1
        edge = factor + additive * 0.1 * 2.0
        assert bound.holds(edge, 1.0, diameter=2.0, xi=0.1)
        assert not bound.holds(edge + 0.01, 1.0, diameter=2.0, xi=0.1)

    def test_median_below_means(self) -> None:
        """Test the k-median factors are smaller than the k-means ones for any c."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.3)
        for variant in ("I", "II"):
            for c in (1.0, 2.0, 9.0):
                median = theorem_bounds(variant, "median", params, c=c)
                means = theorem_bounds(variant, "means", params, c=c)
                assert median.factor < means.factor
                assert median.additive < means.additive

    def test_variant_ii_means_needs_t(self) -> None:
        """Test t <= 1 is rejected."""
        params = SignificanceParams(epsilon1=0.3, epsilon2=0.16, eta=0.5, delta=0.5)
        with pytest.raises(ConfigurationError):
            theorem_bounds("II", "means", params)

    def test_holds(self) -> None:
        """Test the bound check includes the additive term."""
        params = SignificanceParams(epsilon1=0.96, epsilon2=0.16, eta=0.5, delta=0.5)
        bound = theorem_bounds("I", "means", params)
        assert bound.holds(26.0, 1.0)
        assert not bound.holds(27.0, 1.0)
        assert bound.holds(27.0, 1.0, diameter=1.0, xi=0.1)

    def test_boosting(self) -> None:
        """Test 1 - (1 - q)^m and its inverse."""
        assert success_probability(0.5, "median") == 0.125
        assert boosted_success(0.25, 10) == pytest.approx(1.0 - 0.75 ** 10)
        assert runs_for_success(0.25, 0.9) == 9
        assert runs_for_success(1.0, 0.9) == 1


class TestUniformSample:
    """Tests for uniform sampling."""

    def test_single_point(self, rng: np.random.Generator) -> None:
        """Test sampling from one point."""
        sample = uniform_sample(np.array([[3.0, 4.0]]), 1, rng)
        assert sample.points.tolist() == [[3.0, 4.0]]

    def test_deterministic(self) -> None:
        """Test the same seed gives the same sample."""
        X = np.arange(100, dtype=np.float64)
        a = uniform_sample(X, 30, np.random.default_rng(5))
        b = uniform_sample(X, 30, np.random.default_rng(5))
        np.testing.assert_array_equal(a.points, b.points)

    def test_labels_carried(self) -> None:
        """Test the sample keeps labels and is named after the dataset."""
        data = _labeled([5, 5], 2)
        sample = uniform_sample(data, 50, np.random.default_rng(0))
        assert sample.has_labels
        assert sample.name == "dataset[sample]"
        np.testing.assert_array_equal(sample.labels, data.labels[sample.points.ravel().astype(int)])

    def test_empty_rejected(self, rng: np.random.Generator) -> None:
        """Test m < 1 raises."""
        with pytest.raises(InputError):
            uniform_sample(np.zeros((3, 1)), 0, rng)

    def test_half_cluster_concentration(self) -> None:
        """Test the sampled share of a half-size cluster stays within 0.5 +- 0.02."""
        data = _labeled([5000, 5000], 0)
        within = 0
        for trial in range(1000):
            sample = uniform_sample(data, 10_000, np.random.default_rng(trial))
            share = float((sample.labels == 0).mean())
            within += int(abs(share - 0.5) <= 0.02)
        assert within / 1000 >= 0.95

    def test_every_cluster_hit(self) -> None:
        """Test the variant I sample size hits all clusters often enough."""
        data = _labeled([120, 286, 287, 287], 20)
        eta = 0.2
        size = sample_size_alg1(4, 4 * 120 / 1000, eta)
        hits = 0
        for trial in range(1000):
            sample = uniform_sample(data, size, np.random.default_rng(trial))
            hits += int(set(range(4)) <= set(sample.labels.tolist()))
        assert hits / 1000 >= 1 - eta - 0.05

    def test_outlier_count_bounded(self) -> None:
        """Test the sample holds at most (epsilon2 / (k eta))|S| outliers often enough."""
        data = _labeled([120, 286, 287, 287], 20)
        eta, k = 0.2, 4
        epsilon2 = k * 20 / 1000
        size = sample_size_alg1(k, 4 * 120 / 1000, eta)
        limit = epsilon2 / (k * eta) * size
        ok = 0
        for trial in range(1000):
            sample = uniform_sample(data, size, np.random.default_rng(trial))
            ok += int((sample.labels == OUTLIER).sum() <= limit)
        assert ok / 1000 >= 1 - eta - 0.05


class TestRunFramework:
    """Tests for the four sampling algorithms."""

    @pytest.mark.parametrize(
        "variant,kind,expected",
        [("I", "center", 6), ("II", "center", 3), ("I", "means", 6), ("II", "means", 3), ("II", "median", 3)],
    )
    def test_output_size(self, blob_data, variant: str, kind: str, expected: int) -> None:
        """Test k + k' centers for variant I and k for variant II."""
        cfg = FrameworkConfig(variant=variant, kind=kind, k=3, z=5, budget=SampleBudget(60, 3), seed=1)
        result = run_framework(blob_data, cfg)
        assert result.num_centers == expected
        assert result.centers.dim == 2
        assert set(result.timings) == {"sample", "solve"}

    def test_deterministic(self, blob_data) -> None:
        """Test a fixed seed gives identical centers."""
        cfg = FrameworkConfig(variant="II", kind="means", k=3, z=5, budget=SampleBudget(60, 3))
        a = run_framework(blob_data, cfg, np.random.default_rng(3))
        b = run_framework(blob_data, cfg, np.random.default_rng(3))
        np.testing.assert_array_equal(a.centers.centers, b.centers.centers)

    def test_separated_clusters_recovered(self, blob_data) -> None:
        """Test variant II k-center finds the three blobs."""
        cfg = FrameworkConfig(variant="II", kind="center", k=3, z=5, budget=SampleBudget(100, 10), seed=2)
        result = run_framework(blob_data, cfg)
        assert objective_with_outliers(blob_data, result.centers, 5, "center") < 10.0

    def test_sample_cap(self, blob_data) -> None:
        """Test |S| above max_sample_size is a configuration error."""
        cfg = FrameworkConfig(variant="I", kind="means", k=3, budget=SampleBudget(500), max_sample_size=100)
        with pytest.raises(ConfigurationError):
            run_framework(blob_data, cfg)

    def test_solver_variant_mismatch(self, blob_data) -> None:
        """Test an outlier-aware solver is refused for variant I."""
        cfg = FrameworkConfig(variant="I", kind="center", k=3, budget=SampleBudget(50, 1), solver="charikar")
        with pytest.raises(ConfigurationError):
            run_framework(blob_data, cfg)

    def test_solver_kind_mismatch(self, blob_data) -> None:
        """Test a k-center solver is refused for k-means."""
        cfg = FrameworkConfig(variant="I", kind="means", k=3, budget=SampleBudget(50, 1), solver="gonzalez")
        with pytest.raises(ConfigurationError):
            run_framework(blob_data, cfg)

    def test_unknown_solver(self, blob_data) -> None:
        """Test an unregistered solver name."""
        cfg = FrameworkConfig(variant="I", kind="means", k=3, budget=SampleBudget(50, 1), solver="spectral")
        with pytest.raises(ConfigurationError):
            run_framework(blob_data, cfg)

    def test_sample_outliers_below_sample_size(self, blob_data) -> None:
        """Test z' >= |S| is rejected."""
        cfg = FrameworkConfig(variant="II", kind="means", k=3, z=5, budget=SampleBudget(10, 10))
        with pytest.raises(ConfigurationError):
            run_framework(blob_data, cfg)

    def test_theory_warnings_recorded(self, blob_data) -> None:
        """Test a failed precondition is returned on the result."""
        params = SignificanceParams(epsilon1=0.3, epsilon2=0.16, eta=0.5, delta=0.5)
        cfg = FrameworkConfig(variant="II", kind="center", k=3, z=5, params=params, seed=0)
        result = run_framework(blob_data, cfg)
        assert result.warnings
        assert result.to_dict()["warnings"] == result.warnings

    def test_sub_linear_in_n(self) -> None:
        """Test the sample phase touches only |S| points regardless of n."""
        small = Dataset(np.random.default_rng(0).normal(size=(1_000, 3)))
        large = Dataset(np.random.default_rng(0).normal(size=(50_000, 3)))
        cfg = FrameworkConfig(variant="I", kind="means", k=3, budget=SampleBudget(200, 3), seed=4)
        a = run_framework(small, cfg)
        b = run_framework(large, cfg)
        assert a.budget.sample_size == b.budget.sample_size == 200
        assert math.isfinite(a.sample_objective) and math.isfinite(b.sample_objective)

    @pytest.mark.slow
    def test_sample_and_solve_time_flat_in_n(self) -> None:
        """Test sample plus solve time barely moves when n grows tenfold."""
        cfg = FrameworkConfig(
            variant="I",
            kind="means",
            k=8,
            budget=SampleBudget(5000, 8),
            iteration=IterConfig(max_iters=20, tol=0.0),
            n_init=1,
        )

        def seconds(n: int) -> float:
            data = Dataset(np.random.default_rng(n).normal(size=(n, 3)))
            runs = [run_framework(data, cfg, np.random.default_rng(rep)) for rep in range(5)]
            return min(r.timings["sample"] + r.timings["solve"] for r in runs)

        assert seconds(1_000_000) <= 3.0 * seconds(100_000)


@pytest.fixture(scope="module")
def planted():
    """Four planted clusters in 10-D with 100 outliers outside their balls."""
    return gen_synthetic(SyntheticSpec(k=4, n=10_000, z=100, dim=10, seed=11))


def _planted_params(truth, eta: float, delta: float = 0.5) -> SignificanceParams:
    return SignificanceParams.from_instance(
        n=10_000, k=4, z=100, min_cluster_size=min(truth.cluster_sizes), eta=eta, delta=delta
    )


@pytest.mark.slow
class TestCenterGuarantees:
    """Tests for the k-center approximation guarantees on a planted instance."""

    def test_extra_centers(self, planted) -> None:
        """Test the factor-4 bound holds in at least (1 - eta)^2 of the trials."""
        data, truth = planted
        params = _planted_params(truth, eta=0.2)
        bound = theorem_bounds("I", "center", params)
        cfg = FrameworkConfig(variant="I", kind="center", k=4, z=100, params=params)
        held = 0
        for trial in range(200):
            result = run_framework(data, cfg, np.random.default_rng(trial))
            held += int(bound.holds(objective_with_outliers(data, result.centers, 100, "center"), truth.r_opt_bound))
        assert held / 200 >= 0.64

    def test_extra_outliers(self, planted) -> None:
        """Test the factor-5 bound of the greedy-disk variant, single and boosted."""
        data, truth = planted
        params = _planted_params(truth, eta=0.5)
        assert params.ratio >= 6
        bound = theorem_bounds("II", "center", params, c=3.0)
        assert bound.factor == 5.0
        cfg = FrameworkConfig(variant="II", kind="center", k=4, z=100, params=params)

        single = 0
        for trial in range(200):
            result = run_framework(data, cfg, np.random.default_rng(trial))
            single += int(bound.holds(objective_with_outliers(data, result.centers, 100, "center"), truth.r_opt_bound))
        assert single / 200 >= bound.probability

        boosted = 0
        for trial in range(20):
            result, _ = boosted_run(data, cfg, 10, rng=trial)
            boosted += int(bound.holds(result.objective, truth.r_opt_bound))
        assert boosted / 20 >= 0.90

    def test_boosting_from_weak_runs(self, planted) -> None:
        """Test 50 runs at eta = 0.8 lift a 4% single-run guarantee to about 87%."""
        data, truth = planted
        params = _planted_params(truth, eta=0.8)
        cfg = FrameworkConfig(variant="II", kind="center", k=4, z=100, params=params)
        bound = theorem_bounds("II", "center", params, c=3.0)
        assert bound.probability == pytest.approx(0.04)
        target = boosted_success(bound.probability, 50)
        assert target == pytest.approx(0.87, abs=0.005)
        assert runs_for_success(bound.probability, 0.87) == 50

        held = 0
        for trial in range(10):
            result, report = boosted_run(data, cfg, 50, rng=trial)
            assert report.m == 50
            held += int(bound.holds(result.objective, truth.r_opt_bound))
        assert held / 10 >= target - 0.1


@pytest.mark.slow
class TestMeansGuarantees:
    """Tests for the k-means guarantees on the planted instance."""

    @pytest.mark.parametrize("variant", ["I", "II"])
    def test_bound_frequency(self, planted, variant: str) -> None:
        """Test alpha * OPT + beta * xi * L^2 holds in at least (1 - eta)^3 of the trials."""
        data, truth = planted
        params = _planted_params(truth, eta=0.2)
        assert params.satisfies_means_condition()
        bound = theorem_bounds(variant, "means", params)
        cfg = FrameworkConfig(variant=variant, kind="means", k=4, z=100, params=params, n_init=3)
        reference = objective_with_outliers(data, truth.generating_centers, 100, "means")
        held = 0
        for trial in range(100):
            result = run_framework(data, cfg, np.random.default_rng(trial))
            value = objective_with_outliers(data, result.centers, 100, "means")
            held += int(bound.holds(value, reference, diameter=truth.diameter, xi=params.xi))
        assert held / 100 >= success_probability(0.2, "means")


@pytest.fixture(scope="module")
def wide():
    """Eight planted clusters in 100-D with 400 outliers."""
    return gen_synthetic(SyntheticSpec(k=8, n=20_000, z=400, dim=100, seed=3))


@pytest.mark.slow
class TestRecovery:
    """Tests for outlier precision and cluster purity on a high-dimensional instance."""

    @pytest.mark.parametrize("kind", ["center", "means"])
    def test_precision_and_purity(self, wide, kind: str) -> None:
        """Test variant II with a 10% sample and z' = 2 z~ recovers clusters and outliers."""
        data, truth = wide
        budget = direct_budget(data.n, 8, 400, "II", "10%n", outlier_ratio=2.0)
        assert budget.sample_size == 2000
        assert budget.extra == 80
        cfg = FrameworkConfig(variant="II", kind=kind, k=8, z=400, budget=budget)
        scores = []
        for trial in range(5):
            result, _ = boosted_run(data, cfg, 1, rng=trial)
            scores.append((precision(result, truth), purity(result, truth)))
        assert float(np.mean([p for p, _ in scores])) >= 0.95
        assert float(np.mean([q for _, q in scores])) >= 0.95
