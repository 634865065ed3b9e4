"""Reference front sampling for the benchmark problems.

DTLZ fronts have closed forms (simplex / unit hypersphere), so points are
drawn directly on the surface. WFG fronts are sampled by constructing
Pareto-optimal decision vectors (uniform position parameters plus the
problems' optimal distance values) and pushing them through the evaluator;
a non-domination filter then removes the dominated images that the mixed
and disconnected shapes produce.
"""

from __future__ import annotations

import numpy as np

from ..core import RandomSource
from ..kernels import nondominated_mask
from . import wfg

_MAX_ROUNDS = 60


def _simplex_points(count: int, m: int, rng: RandomSource, radius: float) -> np.ndarray:
    """Uniform points on the simplex sum(f) = radius, f >= 0."""
    out = np.empty((count, m), dtype=np.float64)
    done = 0
    while done < count:
        e = -np.log(1.0 - rng.random((count - done, m)))
        s = e.sum(axis=1)
        ok = s > 0.0
        e = e[ok]
        out[done : done + len(e)] = radius * e / e.sum(axis=1, keepdims=True)
        done += len(e)
    return out


def _sphere_points(count: int, m: int, rng: RandomSource) -> np.ndarray:
    """Uniform points on the positive-orthant unit hypersphere."""
    out = np.empty((count, m), dtype=np.float64)
    done = 0
    while done < count:
        v = np.abs(rng.normal((count - done, m)))
        norm = np.sqrt(np.sum(v * v, axis=1))
        ok = norm > 0.0
        v = v[ok]
        out[done : done + len(v)] = v / norm[ok, None]
        done += len(v)
    return out


def _wfg_front_points(spec, count: int, rng: RandomSource) -> np.ndarray:
    """On-front WFG samples: optimal decisions evaluated, then filtered.

    The mixed (WFG1) and disconnected (WFG2) shapes map some optimal
    parameter choices to dominated images, so batches are pooled and
    re-filtered until enough mutually non-dominated points remain.
    """
    pool: np.ndarray | None = None
    upper = np.asarray(spec.upper, dtype=np.float64)
    for _ in range(_MAX_ROUNDS):
        want = max(count - (0 if pool is None else len(pool)), 256)
        u = rng.random((want, spec.k))
        if spec.name == "WFG1":
            # position variables pass through the 0.02-power bias; invert it
            # so the front is covered evenly instead of piling up at 1
            pos = u ** (1.0 / 0.02)
        else:
            pos = u
        dist = wfg.optimal_distance_values(spec.name, pos, spec.n_var)
        Z = np.hstack([pos, dist]) * upper
        F = spec.evaluate_batch(Z)
        pool = F if pool is None else np.vstack([pool, F])
        pool = pool[nondominated_mask(pool)]
        if len(pool) >= count:
            return pool[:count]
    raise RuntimeError(f"could not accumulate {count} non-dominated {spec.name} points")


def sample_front(spec, count: int, rng: RandomSource) -> np.ndarray:
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    if spec.family == "DTLZ":
        if spec.name == "DTLZ1":
            return _simplex_points(count, spec.m, rng, radius=0.5)
        return _sphere_points(count, spec.m, rng)
    return _wfg_front_points(spec, count, rng)
