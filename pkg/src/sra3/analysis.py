"""Statistical comparison and indicator-bias analysis.

The Wilcoxon rank-sum test here is two-sided with midranks for ties: exact
via the rank-sum distribution when either sample has at most 10 values,
otherwise a tie-corrected normal approximation with continuity correction.
Verdicts label the first sample: "win" means sample a is significantly
larger (by median direction) at the given level.

The bias-study side samples two-objective fronts of prescribed shape and
computes, for every sampled point, the mean additive epsilon of the rest of
the front measured against it; that is the quantity whose exponential drives
the epsilon fitness, so its profile shows which regions selection favors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import RandomSource
from .indicators import normalize_objectives
from .kernels import colsum_zero_diag, eps_matrix

__all__ = [
    "ComparisonVerdict",
    "wilcoxon_rank_sum",
    "FRONT_SHAPES",
    "FrontSample",
    "sample_similar_front",
    "mean_eps_profile",
]

_EXACT_LIMIT = 10


@dataclass(frozen=True)
class ComparisonVerdict:
    """Two-sided rank-sum result for samples (a, b).

    ``statistic`` is the rank sum of sample a in the pooled midranking.
    ``outcome`` is "win" when a is significantly larger than b, "loss" when
    significantly smaller, "tie" otherwise; swapping the samples swaps the
    label.
    """

    statistic: float
    p_value: float
    outcome: str
    median_a: float
    median_b: float


def _midranks(pooled: np.ndarray) -> np.ndarray:
    order = np.argsort(pooled, kind="stable")
    ranks = np.empty(len(pooled), dtype=np.float64)
    sorted_vals = pooled[order]
    i = 0
    while i < len(sorted_vals):
        j = i
        while j + 1 < len(sorted_vals) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def _exact_p(ranks: np.ndarray, na: int, w_obs: float) -> float:
    """Exact two-sided p for the rank sum of a size-na subset of ``ranks``.

    Dynamic program over doubled ranks (midranks are half-integers, so
    doubling makes them exact integers); counts all subsets by sum, which is
    equivalent to full enumeration of assignments.
    """
    doubled = np.rint(2.0 * ranks).astype(np.int64)
    total_sum = int(doubled.sum())
    n = len(doubled)
    # dp[j][s] = number of j-subsets with doubled-rank sum s
    dp = np.zeros((na + 1, total_sum + 1), dtype=np.float64)
    dp[0][0] = 1.0
    for r in doubled:
        hi = min(na, n) - 1
        for j in range(hi, -1, -1):
            row = dp[j]
            nxt = dp[j + 1]
            nxt[r:] += row[: total_sum + 1 - r]
    dist = dp[na]
    total = dist.sum()
    w2 = int(np.rint(2.0 * w_obs))
    p_le = dist[: w2 + 1].sum() / total
    p_ge = dist[w2:].sum() / total
    return float(min(1.0, 2.0 * min(p_le, p_ge)))


def _normal_p(ranks: np.ndarray, na: int, nb: int, w_obs: float) -> float:
    n = na + nb
    mean = na * (n + 1) / 2.0
    # tie correction over groups of equal pooled values
    _, counts = np.unique(ranks, return_counts=True)
    tie_term = float(np.sum(counts.astype(np.float64) ** 3 - counts))
    var = na * nb / 12.0 * ((n + 1) - tie_term / (n * (n - 1)))
    if var <= 0.0:
        return 1.0
    diff = w_obs - mean
    # continuity correction shrinks |diff| by one half
    adj = max(abs(diff) - 0.5, 0.0)
    z = adj / math.sqrt(var)
    return math.erfc(z / math.sqrt(2.0))


def wilcoxon_rank_sum(a, b, alpha: float = 0.05) -> ComparisonVerdict:
    """Two-sided Wilcoxon rank-sum comparison of independent samples."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if len(a) < 2 or len(b) < 2:
        raise ValueError("each sample needs at least 2 values")
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("samples must be finite")
    na, nb = len(a), len(b)
    ranks = _midranks(np.concatenate([a, b]))
    w_obs = float(ranks[:na].sum())
    if min(na, nb) <= _EXACT_LIMIT:
        p = _exact_p(ranks, na, w_obs)
    else:
        p = _normal_p(ranks, na, nb, w_obs)
    med_a = float(np.median(a))
    med_b = float(np.median(b))
    if p < alpha and med_a != med_b:
        outcome = "win" if med_a > med_b else "loss"
    else:
        outcome = "tie"
    return ComparisonVerdict(
        statistic=w_obs, p_value=p, outcome=outcome, median_a=med_a, median_b=med_b
    )


# ---------------------------------------------------------------------------
# bias study

FRONT_SHAPES = ("linear", "concave", "convex")


@dataclass(frozen=True)
class FrontSample:
    """Sampled two-objective front, ordered by the front parameter t."""

    shape: str
    scales: tuple[float, float]
    t: np.ndarray
    objectives: np.ndarray


def _shape_points(shape: str, t: np.ndarray, s1: float, s2: float) -> np.ndarray:
    half_pi_t = t * (0.5 * np.pi)
    if shape == "linear":
        f1 = t
        f2 = 1.0 - t
    elif shape == "concave":
        f1 = np.sin(half_pi_t)
        f2 = np.cos(half_pi_t)
    elif shape == "convex":
        f1 = 1.0 - np.cos(half_pi_t)
        f2 = 1.0 - np.sin(half_pi_t)
    else:
        raise ValueError(f"unknown shape {shape!r}; choose from: {', '.join(FRONT_SHAPES)}")
    return np.column_stack([s1 * f1, s2 * f2])


def sample_similar_front(
    shape: str, scales: tuple[float, float], n: int, rng: RandomSource
) -> FrontSample:
    """Draw ``n`` points on a synthetic two-objective front.

    The parameter t is uniform on [0, 1]; t=0 sits at (0, s2) and t=1 at
    (s1, 0) for every shape. Points come back sorted by t.
    """
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    s1, s2 = float(scales[0]), float(scales[1])
    if s1 <= 0 or s2 <= 0:
        raise ValueError("scales must be positive")
    t = np.sort(np.asarray(rng.random(n), dtype=np.float64))
    return FrontSample(shape=shape, scales=(s1, s2), t=t, objectives=_shape_points(shape, t, s1, s2))


def mean_eps_profile(points, normalized: bool) -> np.ndarray:
    """Mean additive epsilon of all rivals measured against each point.

    Entry j averages eps(y, x_j) over rivals y; large values mark points
    that are hard to dominate, which the epsilon fitness rewards. With
    ``normalized`` the point set is min-max scaled first, which makes the
    profile invariant to positive affine rescaling of individual objectives.
    """
    F = np.asarray(points, dtype=np.float64)
    if F.ndim != 2 or len(F) < 2:
        raise ValueError("need an (n, m) point set with n >= 2")
    if normalized:
        F = normalize_objectives(F)[0]
    E = eps_matrix(F)
    return np.asarray(colsum_zero_diag(E)) / (len(F) - 1)
