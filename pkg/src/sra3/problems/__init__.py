"""Benchmark problem registry: DTLZ1-4 and WFG1-9 at any m >= 2.

Conventions baked into :func:`get_problem`:

* DTLZ: n = m + k - 1 distance-plus-position variables in [0, 1], with
  k = 5 for DTLZ1 and k = 10 for DTLZ2-4.
* WFG: k = m - 1 position variables, l = 10 distance variables,
  variable i bounded by [0, 2i].

Analytic nadir points (worst objective values over the true front) are
0.5 for DTLZ1, 1 for DTLZ2-4 and 2i for the WFG problems; the hypervolume
normalization relies on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable

import numpy as np

from ..core import RandomSource
from . import dtlz, wfg
from .fronts import sample_front

__all__ = [
    "ProblemSpec",
    "get_problem",
    "available_problems",
    "sample_reference_front",
]

PROBLEM_NAMES = (
    "DTLZ1",
    "DTLZ2",
    "DTLZ3",
    "DTLZ4",
    "WFG1",
    "WFG2",
    "WFG3",
    "WFG4",
    "WFG5",
    "WFG6",
    "WFG7",
    "WFG8",
    "WFG9",
)

# front geometry tags; metrics and tests key off these
_FRONT_KINDS = {
    "DTLZ1": "simplex",
    "DTLZ2": "sphere",
    "DTLZ3": "sphere",
    "DTLZ4": "sphere",
    "WFG1": "scaled-convex-mixed",
    "WFG2": "scaled-convex-disconnected",
    "WFG3": "scaled-linear-degenerate",
    "WFG4": "scaled-concave",
    "WFG5": "scaled-concave",
    "WFG6": "scaled-concave",
    "WFG7": "scaled-concave",
    "WFG8": "scaled-concave",
    "WFG9": "scaled-concave",
}

_WFG_EVALUATORS: dict[str, Callable] = {
    "WFG1": wfg.wfg1,
    "WFG2": wfg.wfg2,
    "WFG3": wfg.wfg3,
    "WFG4": wfg.wfg4,
    "WFG5": wfg.wfg5,
    "WFG6": wfg.wfg6,
    "WFG7": wfg.wfg7,
    "WFG8": wfg.wfg8,
    "WFG9": wfg.wfg9,
}


@dataclass(frozen=True)
class ProblemSpec:
    """A fully configured problem instance: dimensions, bounds, evaluator."""

    name: str
    m: int
    n_var: int
    k: int
    l: int
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    front_kind: str
    _evaluator: Callable = field(repr=False, compare=False)

    @property
    def family(self) -> str:
        return "DTLZ" if self.name.startswith("DTLZ") else "WFG"

    def nadir(self) -> np.ndarray:
        """Analytic nadir point over the true front."""
        if self.name == "DTLZ1":
            return np.full(self.m, 0.5)
        if self.family == "DTLZ":
            return np.ones(self.m)
        return 2.0 * np.arange(1, self.m + 1, dtype=np.float64)

    def evaluate_batch(self, X) -> np.ndarray:
        """Objective matrix for an (n_points, n_var) decision matrix."""
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.n_var:
            raise ValueError(
                f"{self.name} m={self.m} expects decision matrices with "
                f"{self.n_var} columns, got shape {X.shape}"
            )
        lo = np.asarray(self.lower)
        hi = np.asarray(self.upper)
        if np.any(X < lo) or np.any(X > hi):
            raise ValueError(f"decision values outside bounds for {self.name}")
        F = self._evaluator(X)
        if not np.all(np.isfinite(F)):
            raise ValueError(f"{self.name} produced non-finite objectives")
        return F

    def evaluate(self, x) -> np.ndarray:
        """Objective vector for a single decision vector."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 1:
            raise ValueError(f"expected a 1-d decision vector, got shape {x.shape}")
        return self.evaluate_batch(x[None, :])[0]


def available_problems() -> tuple[str, ...]:
    return PROBLEM_NAMES


def get_problem(name: str, m: int) -> ProblemSpec:
    """Build a problem instance for ``m`` objectives using the suite defaults."""
    key = name.upper()
    if key not in PROBLEM_NAMES:
        raise ValueError(f"unknown problem {name!r}; available: {', '.join(PROBLEM_NAMES)}")
    m = int(m)
    if m < 2:
        raise ValueError(f"need at least 2 objectives, got {m}")
    if key.startswith("DTLZ"):
        k = 5 if key == "DTLZ1" else 10
        n = m + k - 1
        lower = (0.0,) * n
        upper = (1.0,) * n
        evaluator = {
            "DTLZ1": dtlz.dtlz1,
            "DTLZ2": dtlz.dtlz2,
            "DTLZ3": dtlz.dtlz3,
            "DTLZ4": dtlz.dtlz4,
        }[key]
        return ProblemSpec(
            name=key,
            m=m,
            n_var=n,
            k=k,
            l=0,
            lower=lower,
            upper=upper,
            front_kind=_FRONT_KINDS[key],
            _evaluator=partial(evaluator, m=m),
        )
    k = m - 1
    l = 10
    n = k + l
    lower = (0.0,) * n
    upper = tuple(2.0 * i for i in range(1, n + 1))
    return ProblemSpec(
        name=key,
        m=m,
        n_var=n,
        k=k,
        l=l,
        lower=lower,
        upper=upper,
        front_kind=_FRONT_KINDS[key],
        _evaluator=partial(_WFG_EVALUATORS[key], m=m, k=k),
    )


def sample_reference_front(spec: ProblemSpec, count: int, rng: RandomSource) -> np.ndarray:
    """Draw ``count`` points from the true Pareto front of ``spec``.

    Points lie on the front surface and are mutually non-dominated; the
    draw is deterministic in the supplied random source.
    """
    return sample_front(spec, count, rng)
