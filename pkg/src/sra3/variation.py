"""Real-coded variation operators: SBX crossover and polynomial mutation.

Draw protocol (fixed so that seeded runs are reproducible and tests can
script the stream):

* :func:`sbx_pair` consumes one scalar gate draw; if crossover fires it
  then consumes one length-n spread array and one length-n exchange array.
* :func:`polynomial_mutation` always consumes one length-n gate array
  followed by one length-n delta array, regardless of how many variables
  the gate selects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["VariationParams", "sbx_pair", "polynomial_mutation"]


@dataclass(frozen=True)
class VariationParams:
    """SBX / polynomial-mutation settings.

    ``p_mutation=None`` resolves to 1/n at application time, the usual
    per-variable rate.
    """

    p_crossover: float = 1.0
    eta_crossover: float = 20.0
    p_mutation: float | None = None
    eta_mutation: float = 20.0

    def __post_init__(self):
        if not 0.0 <= self.p_crossover <= 1.0:
            raise ValueError(f"p_crossover must be in [0, 1], got {self.p_crossover}")
        if self.p_mutation is not None and not 0.0 <= self.p_mutation <= 1.0:
            raise ValueError(f"p_mutation must be in [0, 1], got {self.p_mutation}")
        if self.eta_crossover <= 0 or self.eta_mutation <= 0:
            raise ValueError("distribution indices must be positive")


def _check_bounds(lower: np.ndarray, upper: np.ndarray, n: int) -> None:
    if lower.shape != (n,) or upper.shape != (n,):
        raise ValueError("bounds must match the decision length")
    if np.any(upper <= lower):
        raise ValueError("upper bounds must exceed lower bounds")


def sbx_pair(p1, p2, lower, upper, params: VariationParams, rng):
    """Simulated binary crossover; returns the two children, bounds-clipped.

    The child pair preserves the parent mean before clipping: with spread
    beta, c1 = 0.5*((1+beta)*p1 + (1-beta)*p2) and c2 mirrors it; each
    variable's children are then exchanged with probability one half.
    """
    p1 = np.asarray(p1, dtype=np.float64)
    p2 = np.asarray(p2, dtype=np.float64)
    if p1.shape != p2.shape or p1.ndim != 1:
        raise ValueError("parents must be 1-d vectors of equal length")
    n = p1.shape[0]
    lower = np.asarray(lower, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    _check_bounds(lower, upper, n)

    if rng.random() >= params.p_crossover:
        return p1.copy(), p2.copy()

    u = np.asarray(rng.random(n), dtype=np.float64)
    exchange = np.asarray(rng.random(n), dtype=np.float64) < 0.5
    exponent = 1.0 / (params.eta_crossover + 1.0)
    beta = np.where(
        u <= 0.5,
        (2.0 * u) ** exponent,
        (1.0 / (2.0 * (1.0 - u))) ** exponent,
    )
    c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2)
    c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2)
    c1_sw = np.where(exchange, c2, c1)
    c2_sw = np.where(exchange, c1, c2)
    return (
        np.clip(c1_sw, lower, upper),
        np.clip(c2_sw, lower, upper),
    )


def polynomial_mutation(x, lower, upper, params: VariationParams, rng):
    """Polynomial mutation with the bounded-delta formulation.

    Each variable mutates with probability ``p_mutation`` (default 1/n);
    the perturbation shrinks near the bounds so mutants stay feasible up
    to the final clip.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("decision must be a 1-d vector")
    n = x.shape[0]
    lower = np.asarray(lower, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    _check_bounds(lower, upper, n)
    p_mut = params.p_mutation if params.p_mutation is not None else 1.0 / n

    gate = np.asarray(rng.random(n), dtype=np.float64) < p_mut
    u = np.asarray(rng.random(n), dtype=np.float64)

    span = upper - lower
    d1 = (x - lower) / span
    d2 = (upper - x) / span
    exp = 1.0 / (params.eta_mutation + 1.0)
    low_branch = (2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1) ** (params.eta_mutation + 1.0)) ** exp - 1.0
    high_branch = 1.0 - (2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2) ** (params.eta_mutation + 1.0)) ** exp
    delta = np.where(u <= 0.5, low_branch, high_branch)
    out = np.where(gate, x + delta * span, x)
    return np.clip(out, lower, upper)
