from __future__ import annotations

import numpy as np
import pytest
from scipy import stats

from sra3.analysis import (
    FRONT_SHAPES,
    ComparisonVerdict,
    mean_eps_profile,
    sample_similar_front,
    wilcoxon_rank_sum,
)
from sra3.core import RandomSource

from _oracles import ranksum_exact_enumeration
from _stubs import ScriptedRng


class TestWilcoxonRankSum:
    def test_identical_samples_tie_at_p_one(self):
        a = list(range(20))
        v = wilcoxon_rank_sum(a, a)
        assert v.outcome == "tie"
        assert v.p_value == 1.0
        assert v.median_a == v.median_b

    def test_identical_small_samples_tie_exactly(self):
        v = wilcoxon_rank_sum([3.0] * 5, [3.0] * 5)
        assert v.outcome == "tie"
        assert v.p_value == 1.0

    def test_clear_separation_small_sample(self):
        a = [10.0, 11.0, 12.0, 13.0, 14.0, 15.0, 16.0, 17.0]
        b = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]
        v = wilcoxon_rank_sum(a, b)
        assert v.outcome == "win"
        # a holds the top 8 of 16 ranks; only 1 of C(16,8) subsets each side
        assert v.statistic == sum(range(9, 17))
        assert v.p_value == pytest.approx(2.0 / 12870.0, rel=1e-12)

    def test_swapping_samples_swaps_the_label(self):
        rng = np.random.default_rng(1)
        a = rng.normal(5.0, 1.0, 30)
        b = rng.normal(0.0, 1.0, 30)
        win = wilcoxon_rank_sum(a, b)
        loss = wilcoxon_rank_sum(b, a)
        assert win.outcome == "win" and loss.outcome == "loss"
        assert win.p_value == pytest.approx(loss.p_value, rel=1e-12)
        assert win.p_value < 1e-6

    def test_tied_observations_use_midranks(self):
        v = wilcoxon_rank_sum([3.0, 5.0, 5.0, 8.0, 9.0], [1.0, 2.0, 5.0, 7.0, 10.0])
        # the three 5s share rank 5, so sample a scores 3 + 5 + 5 + 8 + 9
        assert v.statistic == 30.0
        _, expected_p = ranksum_exact_enumeration(
            [3.0, 5.0, 5.0, 8.0, 9.0], [1.0, 2.0, 5.0, 7.0, 10.0]
        )
        assert v.p_value == pytest.approx(expected_p, rel=1e-12)

    def test_exact_path_matches_subset_enumeration(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            a = rng.integers(0, 9, int(rng.integers(2, 7))).astype(float)
            b = rng.integers(0, 9, int(rng.integers(2, 7))).astype(float)
            v = wilcoxon_rank_sum(a, b)
            w_expected, p_expected = ranksum_exact_enumeration(a.tolist(), b.tolist())
            assert v.statistic == pytest.approx(w_expected, abs=1e-12)
            assert v.p_value == pytest.approx(p_expected, rel=1e-12)

    def test_exact_path_matches_reference_library(self):
        a = [4.0, 6.0, 7.0, 9.0, 10.0]
        b = [1.0, 2.0, 3.0, 5.0, 8.0]
        v = wilcoxon_rank_sum(a, b)
        assert v.statistic == 36.0
        ref = stats.mannwhitneyu(a, b, alternative="two-sided", method="exact")
        assert v.statistic - 5 * 6 / 2 == ref.statistic  # rank sum vs U
        assert v.p_value == pytest.approx(ref.pvalue, rel=1e-12)

    def test_asymptotic_path_matches_reference_library(self):
        rng = np.random.default_rng(3)
        a = rng.integers(0, 15, 25).astype(float)
        b = rng.integers(3, 18, 25).astype(float)
        v = wilcoxon_rank_sum(a, b)
        ref = stats.mannwhitneyu(
            a, b, alternative="two-sided", method="asymptotic", use_continuity=True
        )
        assert v.p_value == pytest.approx(ref.pvalue, rel=1e-9)

    def test_alpha_gates_the_verdict(self):
        a = [5.0, 6.0, 7.0, 8.0]
        b = [1.0, 2.0, 3.0, 4.0]
        # exact two-sided p is 2 / C(8,4) ~ 0.0286
        assert wilcoxon_rank_sum(a, b, alpha=0.05).outcome == "win"
        assert wilcoxon_rank_sum(a, b, alpha=0.01).outcome == "tie"

    def test_validation(self):
        with pytest.raises(ValueError, match="at least 2"):
            wilcoxon_rank_sum([1.0], [1.0, 2.0])
        with pytest.raises(ValueError, match="alpha"):
            wilcoxon_rank_sum([1.0, 2.0], [3.0, 4.0], alpha=1.0)
        with pytest.raises(ValueError, match="finite"):
            wilcoxon_rank_sum([1.0, np.nan], [3.0, 4.0])

    def test_verdict_is_a_frozen_record(self):
        v = wilcoxon_rank_sum([1.0, 2.0], [3.0, 4.0])
        assert isinstance(v, ComparisonVerdict)
        with pytest.raises(AttributeError):
            v.outcome = "win"


class TestSampleSimilarFront:
    def test_linear_front_points(self):
        sample = sample_similar_front("linear", (1.0, 1.0), 3, ScriptedRng([[0.5, 0.0, 1.0]]))
        assert sample.t.tolist() == [0.0, 0.5, 1.0]
        assert sample.objectives.tolist() == [[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]]

    def test_concave_front_sits_on_the_unit_circle(self):
        sample = sample_similar_front("concave", (1.0, 1.0), 64, RandomSource(5))
        norms = np.linalg.norm(sample.objectives, axis=1)
        np.testing.assert_allclose(norms, 1.0, atol=1e-12)

    def test_convex_front_endpoints_follow_the_scales(self):
        sample = sample_similar_front("convex", (1.0, 2.0), 2, ScriptedRng([[1.0, 0.0]]))
        assert sample.objectives[0].tolist() == [0.0, 2.0]
        np.testing.assert_allclose(sample.objectives[1], [1.0, 0.0], atol=1e-15)

    def test_points_come_back_sorted_by_t(self):
        sample = sample_similar_front("linear", (1.0, 1.0), 50, RandomSource(6))
        assert np.all(np.diff(sample.t) >= 0.0)
        assert sample.shape == "linear"
        assert sample.scales == (1.0, 1.0)

    def test_validation(self):
        with pytest.raises(ValueError, match="at least 2"):
            sample_similar_front("linear", (1.0, 1.0), 1, RandomSource(0))
        with pytest.raises(ValueError, match="positive"):
            sample_similar_front("linear", (0.0, 1.0), 4, RandomSource(0))
        with pytest.raises(ValueError, match="unknown shape"):
            sample_similar_front("spiral", (1.0, 1.0), 4, RandomSource(0))


class TestMeanEpsProfile:
    def test_symmetric_pair(self):
        profile = mean_eps_profile(np.array([[0.0, 1.0], [1.0, 0.0]]), normalized=False)
        assert profile.tolist() == [1.0, 1.0]

    def test_linear_three_point_hand_case(self):
        F = np.array([[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]])
        profile = mean_eps_profile(F, normalized=False)
        assert profile.tolist() == [0.75, 0.5, 0.75]

    @pytest.mark.parametrize("shape", FRONT_SHAPES)
    def test_extremes_draw_the_largest_epsilon(self, shape):
        sample = sample_similar_front(shape, (1.0, 1.0), 101, RandomSource(7))
        profile = mean_eps_profile(sample.objectives, normalized=True)
        assert int(np.argmax(profile)) in (0, 100)

    def test_unequal_scales_skew_the_raw_profile(self):
        # without normalization the wider objective dominates the epsilon,
        # pulling the peak to the t=1 end (where that objective is largest)
        sample = sample_similar_front("convex", (1.0, 2.0), 101, RandomSource(8))
        raw = mean_eps_profile(sample.objectives, normalized=False)
        assert int(np.argmax(raw)) == 100

    def test_normalized_profile_ignores_affine_rescaling(self):
        rng = np.random.default_rng(9)
        F = rng.random((40, 2))
        base = mean_eps_profile(F, normalized=True)
        mapped = mean_eps_profile(F * np.array([12.0, 0.3]) + np.array([-4.0, 2.5]), normalized=True)
        np.testing.assert_allclose(mapped, base, atol=1e-12)

    def test_validation(self):
        with pytest.raises(ValueError):
            mean_eps_profile(np.array([[1.0, 2.0]]), normalized=False)
        with pytest.raises(ValueError):
            mean_eps_profile(np.array([1.0, 2.0]), normalized=False)
