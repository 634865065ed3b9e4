from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sra3.core import (
    Archive,
    Individual,
    ObjectiveVector,
    RandomSource,
    dominates,
    nondominated_subset,
    objectives_matrix,
)

from _oracles import nondominated_brute


def _ind(objs, decision=None):
    return Individual(decision if decision is not None else objs, objs)


class TestDominates:
    def test_strict_improvement(self):
        assert dominates((0.0, 0.0), (1.0, 1.0))

    def test_identity_never_dominates(self):
        assert not dominates((0.0, 0.0), (0.0, 0.0))

    def test_mutual_nondomination(self):
        assert not dominates((0.0, 1.0), (1.0, 0.0))
        assert not dominates((1.0, 0.0), (0.0, 1.0))

    def test_weak_improvement_with_one_strict(self):
        assert dominates((0.0, 1.0), (0.0, 2.0))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            dominates((0.0, 1.0), (0.0, 1.0, 2.0))

    def test_accepts_objective_vectors(self):
        assert dominates(ObjectiveVector((0.0, 0.0)), ObjectiveVector((1.0, 1.0)))

    vectors = st.lists(
        st.floats(min_value=-100, max_value=100, allow_nan=False), min_size=3, max_size=3
    )

    @given(a=vectors, b=vectors)
    @settings(max_examples=200, deadline=None)
    def test_matches_definition_and_antisymmetry(self, a, b):
        expected = all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))
        assert dominates(a, b) == expected
        assert not (dominates(a, b) and dominates(b, a))
        assert not dominates(a, a)

    @given(a=vectors, b=vectors, c=vectors)
    @settings(max_examples=100, deadline=None)
    def test_transitivity(self, a, b, c):
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


class TestNondominatedSubset:
    def test_basic_example(self):
        pop = [_ind((0.0, 1.0)), _ind((1.0, 0.0)), _ind((1.0, 1.0))]
        front = nondominated_subset(pop)
        assert [p.objectives.values for p in front] == [(0.0, 1.0), (1.0, 0.0)]

    def test_singleton(self):
        pop = [_ind((0.0, 0.0))]
        assert nondominated_subset(pop) == pop

    def test_empty(self):
        assert nondominated_subset([]) == []

    def test_duplicates_all_survive(self):
        pop = [_ind((0.0, 1.0), (0.1, 0.2)), _ind((0.0, 1.0), (0.3, 0.4)), _ind((2.0, 2.0))]
        front = nondominated_subset(pop)
        assert len(front) == 2
        assert front[0] is pop[0] and front[1] is pop[1]

    def test_input_order_preserved(self):
        pop = [_ind((3.0, 0.0)), _ind((5.0, 5.0)), _ind((0.0, 3.0)), _ind((1.0, 1.0))]
        front = nondominated_subset(pop)
        assert [p.objectives.values for p in front] == [(3.0, 0.0), (0.0, 3.0), (1.0, 1.0)]

    def test_matches_brute_force_on_random_sets(self):
        rng = np.random.default_rng(42)
        for _ in range(10):
            F = rng.random((50, 3))
            pop = [_ind(tuple(row)) for row in F]
            got = nondominated_subset(pop)
            expected = [pop[j] for j in nondominated_brute(F.tolist())]
            assert got == expected

    def test_idempotent(self):
        rng = np.random.default_rng(7)
        pop = [_ind(tuple(row)) for row in rng.random((30, 4))]
        once = nondominated_subset(pop)
        assert nondominated_subset(once) == once

    def test_output_is_antichain(self):
        rng = np.random.default_rng(3)
        pop = [_ind(tuple(row)) for row in rng.random((40, 3))]
        front = nondominated_subset(pop)
        for a in front:
            for b in front:
                assert not dominates(a.objectives, b.objectives)


class TestValueTypes:
    def test_objective_vector_requires_two_components(self):
        with pytest.raises(ValueError):
            ObjectiveVector((1.0,))

    def test_objective_vector_rejects_nan_and_inf(self):
        with pytest.raises(ValueError):
            ObjectiveVector((1.0, float("nan")))
        with pytest.raises(ValueError):
            ObjectiveVector((1.0, float("inf")))

    def test_objective_vector_sequence_protocol(self):
        v = ObjectiveVector([1, 2, 3])
        assert len(v) == 3
        assert v[1] == 2.0
        assert list(v) == [1.0, 2.0, 3.0]
        assert v.as_array().dtype == np.float64

    def test_individual_coerces_objectives(self):
        ind = Individual((0.5, 0.5), (1.0, 2.0))
        assert isinstance(ind.objectives, ObjectiveVector)
        assert ind.evaluated()
        assert not Individual((0.5,)).evaluated()

    def test_individual_rejects_bad_decisions(self):
        with pytest.raises(ValueError):
            Individual(())
        with pytest.raises(ValueError):
            Individual((float("inf"),))

    def test_archive_enforces_exact_capacity(self):
        members = [_ind((0.0, 1.0)), _ind((1.0, 0.0))]
        archive = Archive(members, 2)
        assert len(archive) == 2
        with pytest.raises(ValueError):
            Archive(members, 3)
        with pytest.raises(ValueError):
            Archive(members, 1)

    def test_archive_rejects_unevaluated_members(self):
        with pytest.raises(ValueError):
            Archive([Individual((0.5, 0.5))], 1)

    def test_archive_matrices(self):
        members = [Individual((0.1, 0.2), (1.0, 2.0)), Individual((0.3, 0.4), (3.0, 4.0))]
        archive = Archive(members, 2)
        assert np.array_equal(archive.objectives_matrix(), [[1.0, 2.0], [3.0, 4.0]])
        assert np.array_equal(archive.decisions_matrix(), [[0.1, 0.2], [0.3, 0.4]])

    def test_objectives_matrix_rejects_unevaluated(self):
        with pytest.raises(ValueError):
            objectives_matrix([Individual((0.5, 0.5))])
        with pytest.raises(ValueError):
            objectives_matrix([])


class TestRandomSource:
    def test_equal_seeds_equal_streams(self):
        a = RandomSource(123)
        b = RandomSource(123)
        assert np.array_equal(a.random(10_000), b.random(10_000))

    def test_different_seeds_differ(self):
        assert not np.array_equal(RandomSource(1).random(100), RandomSource(2).random(100))

    def test_negative_seed_rejected(self):
        with pytest.raises(ValueError):
            RandomSource(-1)

    def test_uniform_respects_bounds(self):
        r = RandomSource(5)
        draws = r.uniform(np.array([0.0, 10.0]), np.array([1.0, 20.0]), (100, 2))
        assert draws.shape == (100, 2)
        assert np.all(draws[:, 0] >= 0.0) and np.all(draws[:, 0] < 1.0)
        assert np.all(draws[:, 1] >= 10.0) and np.all(draws[:, 1] < 20.0)

    def test_integers_half_open(self):
        draws = RandomSource(9).integers(0, 3, 1000)
        assert set(np.unique(draws)) == {0, 1, 2}

    def test_spawn_is_deterministic_and_independent(self):
        parent = RandomSource(77)
        c1 = parent.spawn(4)
        c2 = RandomSource(77).spawn(4)
        assert np.array_equal(c1.random(100), c2.random(100))
        assert not np.array_equal(parent.spawn(1).random(100), parent.spawn(2).random(100))
        # spawning does not advance the parent stream
        assert np.array_equal(parent.random(5), RandomSource(77).random(5))
