"""Core value types and primitives shared by the optimizer.

Objective vectors follow minimization convention throughout: smaller is
better in every coordinate, and Pareto dominance is the standard strict
variant (no worse everywhere, strictly better somewhere). Equal vectors
never dominate each other, so duplicates coexist in archives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "ObjectiveVector",
    "Individual",
    "Archive",
    "RandomSource",
    "dominates",
    "nondominated_subset",
    "objectives_matrix",
]


def _as_float_tuple(values: Iterable[float]) -> tuple[float, ...]:
    return tuple(float(v) for v in values)


@dataclass(frozen=True)
class ObjectiveVector:
    """Immutable point in objective space with at least two finite coordinates."""

    values: tuple[float, ...]

    def __init__(self, values: Iterable[float]):
        vals = _as_float_tuple(values)
        if len(vals) < 2:
            raise ValueError(f"objective vector needs at least 2 components, got {len(vals)}")
        if not all(np.isfinite(vals)):
            raise ValueError(f"objective vector must be finite, got {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class Individual:
    """A candidate solution: decision vector plus (once evaluated) its objectives.

    ``objectives is None`` marks a not-yet-evaluated offspring. ``fitness``
    caches the most recent indicator fitness assigned during environmental
    selection; it is bookkeeping, not part of identity.
    """

    decision: tuple[float, ...]
    objectives: ObjectiveVector | None = None
    fitness: float | None = None

    def __init__(
        self,
        decision: Iterable[float],
        objectives: ObjectiveVector | Iterable[float] | None = None,
        fitness: float | None = None,
    ):
        dec = _as_float_tuple(decision)
        if not dec:
            raise ValueError("decision vector must be non-empty")
        if not all(np.isfinite(dec)):
            raise ValueError("decision vector must be finite")
        if objectives is not None and not isinstance(objectives, ObjectiveVector):
            objectives = ObjectiveVector(objectives)
        object.__setattr__(self, "decision", dec)
        object.__setattr__(self, "objectives", objectives)
        object.__setattr__(self, "fitness", None if fitness is None else float(fitness))

    def evaluated(self) -> bool:
        return self.objectives is not None


@dataclass(frozen=True)
class Archive:
    """Fixed-capacity container of evaluated individuals.

    The two-archive algorithm keeps each archive at exactly its capacity
    after initialization and after every update, so construction enforces
    ``len(members) == capacity``.
    """

    members: tuple[Individual, ...]
    capacity: int

    def __init__(self, members: Iterable[Individual], capacity: int):
        mem = tuple(members)
        capacity = int(capacity)
        if capacity < 1:
            raise ValueError(f"archive capacity must be positive, got {capacity}")
        if len(mem) != capacity:
            raise ValueError(f"archive holds {len(mem)} members but capacity is {capacity}")
        for ind in mem:
            if not ind.evaluated():
                raise ValueError("archive members must be evaluated")
        object.__setattr__(self, "members", mem)
        object.__setattr__(self, "capacity", capacity)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Individual]:
        return iter(self.members)

    def objectives_matrix(self) -> np.ndarray:
        return objectives_matrix(self.members)

    def decisions_matrix(self) -> np.ndarray:
        return np.asarray([ind.decision for ind in self.members], dtype=np.float64)


def objectives_matrix(population: Sequence[Individual]) -> np.ndarray:
    """Stack the objective vectors of an evaluated population into an (n, m) array."""
    if not population:
        raise ValueError("population is empty")
    try:
        return np.asarray([ind.objectives.values for ind in population], dtype=np.float64)
    except AttributeError:
        raise ValueError("population contains unevaluated individuals") from None


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """True iff ``a`` Pareto-dominates ``b``: a <= b everywhere and a < b somewhere."""
    av = a.values if isinstance(a, ObjectiveVector) else tuple(a)
    bv = b.values if isinstance(b, ObjectiveVector) else tuple(b)
    if len(av) != len(bv):
        raise ValueError(f"dimension mismatch: {len(av)} vs {len(bv)}")
    strict = False
    for x, y in zip(av, bv):
        if x > y:
            return False
        if x < y:
            strict = True
    return strict


def nondominated_subset(population: Sequence[Individual]) -> list[Individual]:
    """Members of ``population`` not dominated by any other member, input order kept.

    Duplicated objective vectors do not dominate each other, so every copy
    of a non-dominated point survives.
    """
    from .kernels import nondominated_mask

    pop = list(population)
    if not pop:
        return []
    mask = nondominated_mask(objectives_matrix(pop))
    return [ind for ind, keep in zip(pop, mask) if keep]


class RandomSource:
    """Seeded random stream; one instance owns one reproducible sequence.

    Thin wrapper over numpy's PCG64 generator. Identical seed plus identical
    call sequence yields identical draws. Never share one instance across
    concurrent workers; derive independent child streams with :meth:`spawn`.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def random(self, size=None):
        """Uniform draws in [0, 1)."""
        return self._gen.random(size)

    def uniform(self, low, high, size=None):
        return self._gen.uniform(low, high, size)

    def integers(self, low, high, size=None):
        """Uniform integers in [low, high)."""
        return self._gen.integers(low, high, size)

    def normal(self, size=None):
        return self._gen.standard_normal(size)

    def spawn(self, index: int) -> "RandomSource":
        """Deterministic child stream; distinct indices give independent streams."""
        child = RandomSource.__new__(RandomSource)
        child.seed = self.seed
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(int(index),))
        child._gen = np.random.Generator(np.random.PCG64(ss))
        return child
