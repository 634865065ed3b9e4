"""Quality-indicator fitness assignment.

Two complementary per-individual fitness measures drive environmental
selection, both "larger is better":

* I1: additive-epsilon fitness. Each rival y contributes -exp(-eps(y, x)/k)
  to x, so rivals that would need a large translation to dominate x hurt it
  little. The scaling factor k defaults to 0.025.
* I2: shift-based density. Rivals are shifted so coordinates where they
  beat x snap to x's value; x's fitness is the average Euclidean distance
  to the shifted rivals, normalized by 2N - 1 for archive capacity N.

Pairwise indicator values are materialized as plain (n, n) float arrays
(entry [i, j] holds the indicator of member i toward member j) computed by
the active kernel backend.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import ObjectiveVector

__all__ = [
    "EpsParams",
    "eps_indicator",
    "eps_indicator_matrix",
    "fitness_i1",
    "sde_distance",
    "sde_distance_matrix",
    "fitness_i2",
    "normalize_objectives",
    "max_abs_eps",
    "FITNESS_SENTINEL",
]

logger = logging.getLogger(__name__)

FITNESS_SENTINEL = -1.0e300
_EXP_OVERFLOW = 709.0  # np.exp overflows float64 just past 709.78


@dataclass(frozen=True)
class EpsParams:
    """Scaling of the epsilon-fitness exponent."""

    k: float = 0.025

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")


def _vec(a) -> np.ndarray:
    if isinstance(a, ObjectiveVector):
        return a.as_array()
    return np.asarray(a, dtype=np.float64)


def _pop_matrix(pop) -> np.ndarray:
    if isinstance(pop, np.ndarray) and pop.ndim == 2:
        return np.asarray(pop, dtype=np.float64)
    rows = [_vec(p) for p in pop]
    if not rows:
        raise ValueError("population is empty")
    return np.vstack(rows)


def eps_indicator(a, b) -> float:
    """Smallest eps by which ``a`` must be translated to weakly dominate ``b``."""
    av, bv = _vec(a), _vec(b)
    if av.shape != bv.shape:
        raise ValueError(f"dimension mismatch: {av.shape} vs {bv.shape}")
    return float(np.max(av - bv))


def eps_indicator_matrix(pop) -> np.ndarray:
    """E[i, j] = eps_indicator(pop[i], pop[j])."""
    return kernels.eps_matrix(_pop_matrix(pop))


def _i1_from_eps_matrix(E: np.ndarray, k: float) -> tuple[np.ndarray, bool]:
    """Column-sum fitness from an epsilon matrix; returns (fitness, clamped).

    exp(-E/k) can exceed the double range on unnormalized objectives. Every
    term is negative, so one term at or below the sentinel already drags its
    whole column under it; such terms are zeroed before exponentiation and
    the affected columns are forced to the sentinel directly. Clamping is
    monotone, so the induced ranking is preserved (clamped values tie).
    """
    Z = -E / k
    if Z.size and np.max(Z) > _EXP_OVERFLOW:
        hot = Z > _EXP_OVERFLOW
        T = -np.exp(np.where(hot, -np.inf, Z))
        sums = np.asarray(kernels.colsum_zero_diag(T))
        sums[hot.any(axis=0)] = -np.inf
    else:
        T = -np.exp(Z)
        sums = np.asarray(kernels.colsum_zero_diag(T))
    clamped = bool(np.any(sums < FITNESS_SENTINEL))
    fit = np.maximum(sums, FITNESS_SENTINEL)
    return np.asarray(fit, dtype=np.float64), clamped


def fitness_i1(pop, params: EpsParams = EpsParams()) -> np.ndarray:
    """Epsilon-indicator fitness of every member of ``pop`` (larger is better)."""
    F = _pop_matrix(pop)
    fit, clamped = _i1_from_eps_matrix(kernels.eps_matrix(F), params.k)
    if clamped:
        logger.warning(
            "epsilon fitness overflowed the float range; clamped to %.3g "
            "(objective magnitudes are large relative to k=%g)",
            FITNESS_SENTINEL,
            params.k,
        )
    return fit


def sde_distance(a, b) -> float:
    """Shift-based distance from ``a`` to ``b``: norm of b's losses against a."""
    av, bv = _vec(a), _vec(b)
    if av.shape != bv.shape:
        raise ValueError(f"dimension mismatch: {av.shape} vs {bv.shape}")
    d = np.maximum(bv - av, 0.0)
    return float(np.sqrt(np.sum(d * d)))


def sde_distance_matrix(pop) -> np.ndarray:
    """D[i, j] = sde_distance(pop[i], pop[j])."""
    return kernels.sde_matrix(_pop_matrix(pop))


def fitness_i2(pop, capacity: int) -> np.ndarray:
    """Shift-based density fitness, averaged with the fixed 2N - 1 divisor.

    The divisor uses the configured archive capacity N, not the actual
    population size, so fitness scales consistently across the update's
    2N-sized candidate pool.
    """
    capacity = int(capacity)
    if capacity < 1:
        raise ValueError(f"capacity must be positive, got {capacity}")
    D = kernels.sde_matrix(_pop_matrix(pop))
    return kernels.rowsum_zero_diag(D) / (2.0 * capacity - 1.0)


def normalize_objectives(pop) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Min-max scale each objective over ``pop`` to [0, 1].

    Returns (scaled matrix, per-objective minima, per-objective maxima).
    Objectives with zero range scale to 0 everywhere.
    """
    F = _pop_matrix(pop)
    mins = F.min(axis=0)
    maxs = F.max(axis=0)
    span = maxs - mins
    degenerate = span == 0.0
    safe = np.where(degenerate, 1.0, span)
    scaled = (F - mins) / safe
    if np.any(degenerate):
        scaled[:, degenerate] = 0.0
    return scaled, mins, maxs


def max_abs_eps(pop) -> float:
    """Largest absolute pairwise epsilon value, used to rescale exponents."""
    F = _pop_matrix(pop)
    if F.shape[0] < 2:
        raise ValueError("need at least two members to compute the epsilon scale")
    return float(np.max(np.abs(kernels.eps_matrix(F))))
