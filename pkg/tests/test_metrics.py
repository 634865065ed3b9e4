from __future__ import annotations

import numpy as np
import pytest

from sra3.core import RandomSource
from sra3.metrics import (
    NADIR_MARGIN,
    MetricConfig,
    hypervolume,
    hypervolume_exact,
    hypervolume_mc,
    igd,
    normalized_hv,
)
from sra3.problems import get_problem, sample_reference_front

from _oracles import hv_inclusion_exclusion, igd_brute

CFG = MetricConfig()


def _fronts(n_instances: int, m: int, seed: int, max_points: int = 8):
    rng = np.random.default_rng(seed)
    for _ in range(n_instances):
        n = int(rng.integers(1, max_points + 1))
        yield rng.random((n, m))


class TestHypervolumeExact:
    def test_single_box(self):
        assert hypervolume_exact([[0.5, 0.5]], (1.0, 1.0)) == 0.25

    def test_two_overlapping_boxes(self):
        # 0.32 + 0.32 - 0.16 by inclusion-exclusion
        assert hypervolume_exact([[0.2, 0.6], [0.6, 0.2]], (1.0, 1.0)) == pytest.approx(
            0.48, abs=1e-15
        )

    def test_three_objective_box(self):
        assert hypervolume_exact([[0.5, 0.5, 0.5]], (1.0, 1.0, 1.0)) == pytest.approx(
            0.125, abs=1e-15
        )

    def test_point_on_or_past_the_reference_contributes_nothing(self):
        assert hypervolume_exact([[1.5, 1.5]], (1.0, 1.0)) == 0.0
        assert hypervolume_exact([[1.0, 0.2]], (1.0, 1.0)) == 0.0

    def test_empty_front(self):
        assert hypervolume_exact(np.empty((0, 2)), (1.0, 1.0)) == 0.0

    def test_dominated_and_duplicate_points_are_free(self):
        base = hypervolume_exact([[0.2, 0.6], [0.6, 0.2]], (1.0, 1.0))
        padded = hypervolume_exact(
            [[0.2, 0.6], [0.6, 0.2], [0.7, 0.7], [0.2, 0.6]], (1.0, 1.0)
        )
        assert padded == base

    @pytest.mark.parametrize("m", [2, 3])
    def test_matches_inclusion_exclusion_oracle(self, m):
        for P in _fronts(10, m, seed=900 + m):
            got = hypervolume_exact(P, np.ones(m))
            expected = hv_inclusion_exclusion(P.tolist(), [1.0] * m)
            assert got == pytest.approx(expected, rel=1e-12, abs=1e-15)

    @pytest.mark.parametrize("m", [2, 3])
    def test_adding_a_point_never_decreases_volume(self, m):
        rng = np.random.default_rng(42 + m)
        P = rng.random((1, m))
        hv_prev = hypervolume_exact(P, np.ones(m))
        for _ in range(20):
            P = np.vstack([P, rng.random(m)])
            hv_next = hypervolume_exact(P, np.ones(m))
            assert hv_next >= hv_prev
            hv_prev = hv_next

    def test_four_objectives_unsupported(self):
        with pytest.raises(ValueError, match="2 or 3"):
            hypervolume_exact(np.full((1, 4), 0.5), np.ones(4))

    def test_reference_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            hypervolume_exact([[0.5, 0.5]], (1.0, 1.0, 1.0))

    def test_requires_a_point_matrix(self):
        with pytest.raises(ValueError, match="objective matrix"):
            hypervolume_exact(np.array([0.5, 0.5]), (1.0, 1.0))


class TestHypervolumeMc:
    def test_deterministic_in_the_seed(self):
        P = np.random.default_rng(1).random((6, 4))
        a = hypervolume_mc(P, np.ones(4), 50_000, seed=77)
        b = hypervolume_mc(P, np.ones(4), 50_000, seed=77)
        c = hypervolume_mc(P, np.ones(4), 50_000, seed=123456)
        assert a == b
        assert a != c

    def test_agrees_with_exact_in_three_objectives(self):
        rng = np.random.default_rng(2)
        for seed in (10, 11):
            P = rng.random((8, 3))
            exact = hypervolume_exact(P, np.ones(3))
            estimate = hypervolume_mc(P, np.ones(3), 200_000, seed=seed)
            assert estimate == pytest.approx(exact, abs=0.01)

    def test_no_contributors_gives_zero(self):
        assert hypervolume_mc([[1.0, 1.0]], (1.0, 1.0), 1000, seed=0) == 0.0
        assert hypervolume_mc(np.empty((0, 3)), np.ones(3), 1000, seed=0) == 0.0

    def test_sample_count_must_be_positive(self):
        with pytest.raises(ValueError, match="n_samples"):
            hypervolume_mc([[0.5, 0.5]], (1.0, 1.0), 0, seed=0)

    def test_spans_multiple_chunks_consistently(self):
        # just over one chunk boundary; the estimate stays near the truth
        P = [[0.5, 0.5]]
        got = hypervolume_mc(P, (1.0, 1.0), (1 << 17) + 4096, seed=5)
        assert got == pytest.approx(0.25, abs=0.01)


class TestHypervolumeDispatch:
    def test_low_dimensions_use_the_exact_path(self):
        P = np.random.default_rng(3).random((7, 3))
        assert hypervolume(P, np.ones(3), CFG, seed=1) == hypervolume_exact(P, np.ones(3))

    def test_high_dimensions_fall_back_to_sampling(self):
        P = np.random.default_rng(4).random((7, 4))
        got = hypervolume(P, np.ones(4), MetricConfig(hv_mc_samples=30_000), seed=9)
        assert got == hypervolume_mc(P, np.ones(4), 30_000, seed=9)


class TestNormalizedHv:
    def test_margin_constant(self):
        assert NADIR_MARGIN == 1.1

    def test_axis_points_hand_value(self):
        # unit-sphere extremes against a (1, 1) nadir: points scale to 1/1.1
        a = 1.0 / 1.1
        expected = 2.0 * (1.0 - a) - (1.0 - a) ** 2
        got = normalized_hv([[1.0, 0.0], [0.0, 1.0]], (1.0, 1.0), CFG, seed=0)
        assert got == pytest.approx(expected, rel=1e-12)
        assert got == pytest.approx(0.173554, abs=1e-6)

    def test_empty_front(self):
        assert normalized_hv(np.empty((0, 2)), (1.0, 1.0), CFG, seed=0) == 0.0

    def test_points_beyond_the_margin_are_discarded(self):
        assert normalized_hv([[2.0, 2.0]], (1.0, 1.0), CFG, seed=0) == 0.0

    def test_bounded_by_one(self):
        got = normalized_hv([[1e-9, 1e-9]], (1.0, 1.0), CFG, seed=0)
        assert 0.0 <= got <= 1.0
        assert got == pytest.approx(1.0 - (2.0 / 1.1 - 1.0 / 1.1**2) * 1e-9, rel=1e-6)

    def test_nadir_validation(self):
        with pytest.raises(ValueError, match="dimension"):
            normalized_hv([[0.5, 0.5]], (1.0, 1.0, 1.0), CFG, seed=0)
        with pytest.raises(ValueError, match="positive"):
            normalized_hv([[0.5, 0.5]], (1.0, 0.0), CFG, seed=0)

    def test_true_five_objective_simplex_front_scores_high(self):
        # the ideal plane's normalized volume; anything near-optimal is >0.95
        spec = get_problem("DTLZ1", 5)
        F = sample_reference_front(spec, 500, RandomSource(31))
        got = normalized_hv(
            F, spec.nadir(), MetricConfig(hv_mc_samples=200_000), seed=11
        )
        assert got >= 0.95


class TestIgd:
    def test_zero_when_sets_coincide(self):
        P = np.random.default_rng(5).random((20, 3))
        assert igd(P, P) == 0.0

    def test_unit_distance_hand_case(self):
        # reference corners normalize to (0,0) and (1,1); both sit one unit
        # from the single approximation point (1, 0)
        assert igd([[1.0, 0.0]], [[0.0, 0.0], [1.0, 1.0]]) == pytest.approx(1.0, abs=1e-15)

    def test_matches_scalar_oracle(self):
        rng = np.random.default_rng(6)
        for _ in range(10):
            P = rng.random((int(rng.integers(1, 12)), 3))
            R = rng.random((int(rng.integers(2, 30)), 3))
            assert igd(P, R) == igd_brute(P.tolist(), R.tolist())

    def test_growing_the_approximation_weakly_improves(self):
        rng = np.random.default_rng(7)
        R = rng.random((40, 3))
        P = rng.random((2, 3))
        prev = igd(P, R)
        for _ in range(10):
            P = np.vstack([P, rng.random(3)])
            cur = igd(P, R)
            assert cur <= prev
            prev = cur

    def test_degenerate_reference_column_is_ignored(self):
        R = np.array([[0.0, 5.0], [1.0, 5.0]])
        P = np.array([[0.5, 123.0]])
        # second column has zero spread in R, so only the first matters
        assert igd(P, R) == pytest.approx(0.5, abs=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError, match="non-empty"):
            igd(np.empty((0, 2)), [[0.0, 0.0]])
        with pytest.raises(ValueError, match="non-empty"):
            igd([[0.0, 0.0]], np.empty((0, 2)))
        with pytest.raises(ValueError, match="mismatch"):
            igd([[0.0, 0.0]], [[0.0, 0.0, 0.0]])


class TestMetricConfig:
    def test_protocol_defaults(self):
        assert CFG.hv_mc_samples == 1_000_000
        assert CFG.hv_exact_max_m == 3
        assert CFG.igd_reference_size == 10_000
        assert CFG.reference_seed == 8_151_623

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"hv_mc_samples": 0},
            {"hv_exact_max_m": 1},
            {"igd_reference_size": 0},
        ],
    )
    def test_rejects_degenerate_settings(self, kwargs):
        with pytest.raises(ValueError):
            MetricConfig(**kwargs)
