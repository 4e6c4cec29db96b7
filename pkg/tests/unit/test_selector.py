"""Unit tests for streaming accumulators, one-pass selection and boosting."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sampleclust.core import OUTLIER, CenterSet, ObjectiveKind, assign_memberships, objective_with_outliers
from sampleclust.errors import InputError
from sampleclust.random import DeterministicRNG, derive_seed
from sampleclust.sampler import FrameworkConfig, SampleBudget, run_framework
from sampleclust.selector import CandidateSet, ExactSum, TopCosts, boosted_run, one_pass_select
from tests.fixtures import line


class TestExactSum:
    """Tests for the exact float accumulator."""

    def test_matches_fsum(self, rng: np.random.Generator) -> None:
        """Test blockwise adds agree with one fsum."""
        values = rng.normal(scale=1e8, size=1000) ** 2
        acc = ExactSum()
        for block in np.array_split(values, 7):
            acc.add(block)
        assert acc.total() == math.fsum(values.tolist())

    def test_cancellation(self) -> None:
        """Test large terms cancel without losing the small one."""
        acc = ExactSum()
        acc.add([1e100, 1.0, -1e100])
        assert acc.total() == 1.0

    def test_merge_order_free(self, rng: np.random.Generator) -> None:
        """Test merging partial sums in either order."""
        values = rng.uniform(0, 1e6, size=300)
        a, b = ExactSum(), ExactSum()
        a.add(values[:100])
        b.add(values[100:])
        a.merge(b)
        c, d = ExactSum(), ExactSum()
        c.add(values[100:])
        d.add(values[:100])
        c.merge(d)
        assert a.total() == c.total() == math.fsum(values.tolist())

    def test_total_minus(self) -> None:
        """Test removing values is exact."""
        acc = ExactSum()
        acc.add([0.1, 0.2, 0.3, 1e16])
        assert acc.total_minus([1e16]) == math.fsum([0.1, 0.2, 0.3])


class TestTopCosts:
    """Tests for the bounded largest-cost heap."""

    def test_keeps_largest(self) -> None:
        """Test only the capacity largest pairs survive."""
        top = TopCosts(2)
        top.push(np.array([5.0, 1.0, 9.0]), np.array([0, 1, 2]))
        top.push(np.array([7.0]), np.array([3]))
        assert top.costs.tolist() == [7.0, 9.0]
        assert top.indices.tolist() == [3, 2]
        assert top.smallest_kept() == 7.0

    def test_ties_prefer_higher_index(self) -> None:
        """Test equal costs rank the later point as larger."""
        top = TopCosts(1)
        top.push(np.array([3.0, 3.0]), np.array([4, 2]))
        assert top.indices.tolist() == [4]

    def test_largest_zero(self) -> None:
        """Test asking for no pairs."""
        top = TopCosts(3)
        top.push(np.array([1.0]), np.array([0]))
        costs, idx = top.largest(0)
        assert costs.size == 0 and idx.size == 0

    def test_capacity_checked(self) -> None:
        """Test capacity < 1 raises."""
        with pytest.raises(ValueError):
            TopCosts(0)


class TestOnePassSelect:
    """Tests for single-scan best-candidate selection."""

    def test_hand_example(self) -> None:
        """Test the winner and its memberships on four points."""
        data = line(0, 1, 9, 10)
        cands = [CenterSet([[0.0]]), CenterSet([[0.0], [10.0]]), CenterSet([[5.0]])]
        sel = one_pass_select(data, cands, 1, "center")
        assert sel.best_index == 1
        assert sel.objectives == [9.0, 1.0, 5.0]
        assert sel.result.objective == 1.0
        assert sel.result.memberships.tolist() == [0, 0, OUTLIER, 1]
        assert sel.result.metadata["best_index"] == 1

    def test_tie_keeps_lowest_index(self) -> None:
        """Test identical candidates resolve to the first."""
        cands = [CenterSet([[1.0]]), CenterSet([[1.0]])]
        assert one_pass_select(line(0, 2), cands, 0, "means").best_index == 0

    @pytest.mark.parametrize("kind", list(ObjectiveKind))
    def test_objectives_match_evaluator(self, rng: np.random.Generator, kind: ObjectiveKind) -> None:
        """Test every candidate objective equals the batch evaluator bitwise."""
        X = rng.normal(scale=50.0, size=(503, 3))
        cands = [CenterSet(rng.normal(scale=50.0, size=(4, 3))) for _ in range(5)]
        sel = one_pass_select(X, cands, 11, kind, chunk_size=37)
        for H, value in zip(cands, sel.objectives):
            assert value == objective_with_outliers(X, H, 11, kind)
        assert sel.points_read == 503

    def test_memberships_match_assignment(self, rng: np.random.Generator) -> None:
        """Test the winner's memberships equal a direct assignment."""
        X = rng.normal(size=(200, 2))
        cands = [CenterSet(rng.normal(size=(3, 2))) for _ in range(4)]
        sel = one_pass_select(X, cands, 6, "means", chunk_size=64)
        direct = assign_memberships(X, cands[sel.best_index], 6, "means")
        np.testing.assert_array_equal(sel.result.memberships, direct.memberships)

    def test_rescan_when_over_cap(self, rng: np.random.Generator) -> None:
        """Test the memory-bounded path recovers the same memberships."""
        X = rng.normal(size=(300, 2))
        cands = [CenterSet(rng.normal(size=(3, 2))) for _ in range(3)]
        buffered = one_pass_select(X, cands, 4, "median")
        rescanned = one_pass_select(X, cands, 4, "median", membership_cap=10)
        assert not buffered.rescanned
        assert rescanned.rescanned
        assert rescanned.best_index == buffered.best_index
        np.testing.assert_array_equal(rescanned.result.memberships, buffered.result.memberships)

    def test_empty_candidates(self) -> None:
        """Test an empty candidate list raises."""
        with pytest.raises(InputError):
            one_pass_select(line(0, 1), [], 0, "center")

    def test_dimension_mismatch(self) -> None:
        """Test candidates of different dimension raise."""
        with pytest.raises(InputError):
            CandidateSet([CenterSet([[0.0]]), CenterSet([[0.0, 1.0]])])

    def test_z_too_large(self) -> None:
        """Test z >= n raises."""
        with pytest.raises(InputError):
            one_pass_select(line(0, 1), [CenterSet([[0.0]])], 2, "center")

    @settings(max_examples=50, deadline=None)
    @given(
        coords=st.lists(st.floats(-100, 100, allow_nan=False), min_size=2, max_size=12),
        cands=st.lists(
            st.lists(st.floats(-100, 100, allow_nan=False), min_size=1, max_size=3), min_size=1, max_size=4
        ),
        kind=st.sampled_from(list(ObjectiveKind)),
        chunk=st.integers(1, 5),
        rescan=st.booleans(),
        data=st.data(),
    )
    def test_matches_per_candidate_evaluation(self, coords, cands, kind, chunk, rescan, data) -> None:
        """Test the scan agrees with evaluating every candidate on its own."""
        z = data.draw(st.integers(0, len(coords) - 1))
        X = np.asarray(coords, dtype=np.float64).reshape(-1, 1)
        centers = [CenterSet(np.asarray(c, dtype=np.float64).reshape(-1, 1)) for c in cands]
        sel = one_pass_select(X, centers, z, kind, chunk_size=chunk, membership_cap=0 if rescan else 10**6)

        expected = [objective_with_outliers(X, H, z, kind) for H in centers]
        assert sel.objectives == expected
        assert sel.best_index == expected.index(min(expected))
        winner = assign_memberships(X, centers[sel.best_index], z, kind)
        np.testing.assert_array_equal(sel.result.memberships, winner.memberships)


class TestBoostedRun:
    """Tests for m framework runs plus selection."""

    def test_deterministic(self, blob_data) -> None:
        """Test a fixed seed reproduces the winner and all candidate objectives."""
        cfg = FrameworkConfig(variant="II", kind="means", k=3, z=5, budget=SampleBudget(40, 2))
        a, ra = boosted_run(blob_data, cfg, 4, rng=11)
        b, rb = boosted_run(blob_data, cfg, 4, rng=11)
        assert ra.candidate_objectives == rb.candidate_objectives
        np.testing.assert_array_equal(a.memberships, b.memberships)

    def test_run_seeds(self, blob_data) -> None:
        """Test run i is seeded from the base seed and its index."""
        cfg = FrameworkConfig(variant="I", kind="center", k=3, z=5, budget=SampleBudget(30, 1))
        _, report = boosted_run(blob_data, cfg, 3, rng=7)
        assert report.m == 3
        assert report.run_seeds == [derive_seed(7, "run", i) for i in range(3)]
        assert report.points_read == blob_data.n

    def test_runs_use_child_streams(self, blob_data) -> None:
        """Test a single boosted run reproduces the framework run on its child stream."""
        cfg = FrameworkConfig(variant="II", kind="means", k=3, z=5, budget=SampleBudget(40, 2))
        result, _ = boosted_run(blob_data, cfg, 1, rng=7)
        direct = run_framework(blob_data, cfg, DeterministicRNG(7).child("run", 0))
        np.testing.assert_array_equal(result.centers.centers, direct.centers.centers)

    def test_winner_is_minimum(self, blob_data) -> None:
        """Test the returned objective is the best candidate's."""
        cfg = FrameworkConfig(variant="II", kind="center", k=3, z=5, budget=SampleBudget(30, 2))
        result, report = boosted_run(blob_data, cfg, 5, rng=3)
        assert result.objective == min(report.candidate_objectives)
        assert report.candidate_objectives[report.best_index] == result.objective
        assert result.outlier_count == 5

    def test_report_without_timings(self, blob_data) -> None:
        """Test records can omit timings."""
        cfg = FrameworkConfig(variant="I", kind="means", k=3, z=5, budget=SampleBudget(30, 1))
        _, report = boosted_run(blob_data, cfg, 2, rng=1)
        assert "timings" not in report.to_dict(include_timings=False)
        assert set(report.timings()) == {"sample", "solve", "select"}

    def test_invalid_m(self, blob_data) -> None:
        """Test m < 1 raises."""
        cfg = FrameworkConfig(variant="I", kind="means", k=3, budget=SampleBudget(30))
        with pytest.raises(InputError):
            boosted_run(blob_data, cfg, 0)
