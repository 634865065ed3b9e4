"""Front quality metrics: hypervolume and inverted generational distance.

Hypervolume is exact (sweep / objective slicing) up to three objectives and
Monte Carlo above; the normalized form divides by 1.1 times the problem's
analytic nadir and measures against the unit reference point, so values are
comparable across problems and bounded by 1.

IGD normalizes both the approximation set and the reference front by the
reference front's per-objective bounds before averaging nearest distances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .kernels import count_dominated

__all__ = [
    "MetricConfig",
    "hypervolume",
    "hypervolume_exact",
    "hypervolume_mc",
    "normalized_hv",
    "igd",
    "NADIR_MARGIN",
]

NADIR_MARGIN = 1.1
_MC_CHUNK = 1 << 17


@dataclass(frozen=True)
class MetricConfig:
    """Sampling sizes and seeds for the stochastic metric machinery."""

    hv_mc_samples: int = 1_000_000
    hv_exact_max_m: int = 3
    igd_reference_size: int = 10_000
    reference_seed: int = 8_151_623

    def __post_init__(self):
        if self.hv_mc_samples < 1:
            raise ValueError("hv_mc_samples must be positive")
        if self.hv_exact_max_m < 2:
            raise ValueError("hv_exact_max_m must be at least 2")
        if self.igd_reference_size < 1:
            raise ValueError("igd_reference_size must be positive")


def _points(P) -> np.ndarray:
    P = np.asarray(P, dtype=np.float64)
    if P.ndim != 2:
        raise ValueError(f"expected an (n, m) objective matrix, got shape {P.shape}")
    return P


def _contributors(P: np.ndarray, ref: np.ndarray) -> np.ndarray:
    """Points strictly below the reference in every coordinate; only those
    bound a box of positive volume."""
    return P[np.all(P < ref, axis=1)]


def _hv2(P: np.ndarray, ref: np.ndarray) -> float:
    """Exact bi-objective hypervolume by a left-to-right sweep."""
    if len(P) == 0:
        return 0.0
    order = np.lexsort((P[:, 1], P[:, 0]))
    pts = P[order]
    hv = 0.0
    ceiling = ref[1]
    for f1, f2 in pts:
        if f2 < ceiling:
            hv += (ref[0] - f1) * (ceiling - f2)
            ceiling = f2
    return hv


def _hv3(P: np.ndarray, ref: np.ndarray) -> float:
    """Exact tri-objective hypervolume by slicing along the third objective."""
    if len(P) == 0:
        return 0.0
    levels = np.unique(P[:, 2])
    hv = 0.0
    for i, z in enumerate(levels):
        z_next = levels[i + 1] if i + 1 < len(levels) else ref[2]
        active = P[P[:, 2] <= z][:, :2]
        hv += _hv2(active, ref[:2]) * (z_next - z)
    return hv


def hypervolume_exact(P, ref) -> float:
    """Measure of the region dominated by ``P`` and bounded by ``ref``.

    Supports two and three objectives; higher dimensions use
    :func:`hypervolume_mc`.
    """
    P = _points(P)
    ref = np.asarray(ref, dtype=np.float64)
    if ref.shape != (P.shape[1],):
        raise ValueError("reference point dimension mismatch")
    kept = _contributors(P, ref)
    if P.shape[1] == 2:
        return _hv2(kept, ref)
    if P.shape[1] == 3:
        return _hv3(kept, ref)
    raise ValueError(f"exact hypervolume supports 2 or 3 objectives, got {P.shape[1]}")


def hypervolume_mc(P, ref, n_samples: int, seed: int) -> float:
    """Monte Carlo hypervolume: dominated fraction of a bounding box.

    The box spans from the contributors' componentwise minimum to the
    reference point. Sampling runs in fixed-size chunks with per-chunk
    substreams of ``seed``, so the total is reproducible and chunks could be
    evaluated concurrently without changing the result.
    """
    P = _points(P)
    ref = np.asarray(ref, dtype=np.float64)
    if ref.shape != (P.shape[1],):
        raise ValueError("reference point dimension mismatch")
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    kept = _contributors(P, ref)
    if len(kept) == 0:
        return 0.0
    lo = kept.min(axis=0)
    box = np.prod(ref - lo)
    if box <= 0.0:
        return 0.0
    hits = 0
    done = 0
    chunk_index = 0
    while done < n_samples:
        size = min(_MC_CHUNK, n_samples - done)
        ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(chunk_index,))
        gen = np.random.Generator(np.random.PCG64(ss))
        samples = lo + (ref - lo) * gen.random((size, len(ref)))
        hits += count_dominated(samples, kept)
        done += size
        chunk_index += 1
    return float(box) * hits / n_samples


def hypervolume(P, ref, config: MetricConfig, seed: int) -> float:
    """Exact hypervolume when the dimension allows it, Monte Carlo otherwise."""
    P = _points(P)
    if P.shape[1] <= config.hv_exact_max_m:
        return hypervolume_exact(P, ref)
    return hypervolume_mc(P, ref, config.hv_mc_samples, seed)


def normalized_hv(P, nadir, config: MetricConfig, seed: int) -> float:
    """Hypervolume after scaling objectives by ``NADIR_MARGIN * nadir``.

    Points at or beyond the unit reference in any coordinate are discarded;
    the result lies in [0, 1].
    """
    P = _points(P)
    nadir = np.asarray(nadir, dtype=np.float64)
    if nadir.shape != (P.shape[1],):
        raise ValueError("nadir dimension mismatch")
    if np.any(nadir <= 0):
        raise ValueError("nadir components must be positive")
    scaled = P / (NADIR_MARGIN * nadir)
    return hypervolume(scaled, np.ones(P.shape[1]), config, seed)


def igd(P, R) -> float:
    """Mean distance from each reference point to its nearest approximation
    point, in the reference front's normalized coordinates."""
    P = _points(P)
    R = _points(R)
    if len(P) == 0 or len(R) == 0:
        raise ValueError("IGD needs non-empty point sets")
    if P.shape[1] != R.shape[1]:
        raise ValueError("dimension mismatch between approximation and reference")
    mins = R.min(axis=0)
    span = R.max(axis=0) - mins
    degenerate = span == 0.0
    safe = np.where(degenerate, 1.0, span)
    Pn = (P - mins) / safe
    Rn = (R - mins) / safe
    if np.any(degenerate):
        Pn[:, degenerate] = 0.0
        Rn[:, degenerate] = 0.0
    return float(cdist(Rn, Pn).min(axis=1).mean())
