"""Pure-numpy implementations of the pairwise-indicator kernels.

This backend mirrors the compiled extension exactly, including summation
order: accumulations run over one axis in ascending index order (a Python
loop of vectorized adds) instead of numpy's pairwise-tree reductions, so
both backends produce bit-identical floating point results and selection
decisions never depend on which backend is active.
"""

from __future__ import annotations

import numpy as np


def eps_matrix(F: np.ndarray) -> np.ndarray:
    """E[i, j] = max_k (F[i, k] - F[j, k]), the additive epsilon of i toward j."""
    F = np.asarray(F, dtype=np.float64)
    n, m = F.shape
    E = F[:, 0][:, None] - F[None, :, 0]
    for k in range(1, m):
        np.maximum(E, F[:, k][:, None] - F[None, :, k], out=E)
    return E


def sde_matrix(F: np.ndarray) -> np.ndarray:
    """D[i, j] = Euclidean norm of the positive parts of F[j] - F[i].

    Coordinates where j is at least as good as i contribute zero; the rest
    contribute their shifted distance.
    """
    F = np.asarray(F, dtype=np.float64)
    n, m = F.shape
    acc = np.zeros((n, n), dtype=np.float64)
    for k in range(m):
        d = np.maximum(F[None, :, k] - F[:, None, k], 0.0)
        acc += d * d
    return np.sqrt(acc)


def nondominated_mask(F: np.ndarray) -> np.ndarray:
    """Boolean mask of rows not Pareto-dominated by any other row."""
    F = np.asarray(F, dtype=np.float64)
    n = F.shape[0]
    mask = np.ones(n, dtype=bool)
    for j in range(n):
        dominated_by_j = np.all(F[j] <= F, axis=1) & np.any(F[j] < F, axis=1)
        mask &= ~dominated_by_j
    return mask


def colsum_zero_diag(T: np.ndarray) -> np.ndarray:
    """Column sums of T with the diagonal treated as zero, in ascending row order."""
    T = np.asarray(T)
    n = T.shape[0]
    out = np.zeros(n, dtype=T.dtype)
    for i in range(n):
        row = T[i].copy()
        row[i] = 0.0
        out += row
    return out


def rowsum_zero_diag(T: np.ndarray) -> np.ndarray:
    """Row sums of T with the diagonal treated as zero, in ascending column order."""
    T = np.asarray(T)
    n = T.shape[0]
    out = np.zeros(n, dtype=T.dtype)
    for j in range(n):
        col = T[:, j].copy()
        col[j] = 0.0
        out += col
    return out


def ca_reduce(W: np.ndarray, keep: int) -> tuple[np.ndarray, int]:
    """Iterative worst-out reduction used by the normalized archive update.

    W[i, j] = exp(-E[i, j] / (c * k)) for the scaled epsilon matrix E. Initial
    fitness of j is -sum_{i != j} W[i, j]; each step removes the individual
    with the smallest fitness (ties: lowest index) and adds the removed row
    back into the survivors' fitness. Returns the surviving indices in
    ascending order and the number of removals performed.
    """
    W = np.asarray(W, dtype=np.float64)
    n = W.shape[0]
    keep = int(keep)
    if keep < 1 or keep > n:
        raise ValueError(f"keep must be in [1, {n}], got {keep}")
    fit = -colsum_zero_diag(W)
    alive = np.ones(n, dtype=bool)
    removals = 0
    size = n
    while size > keep:
        masked = np.where(alive, fit, np.inf)
        worst = int(np.argmin(masked))  # first minimum = lowest-index tie break
        alive[worst] = False
        row = W[worst].copy()
        row[~alive] = 0.0
        fit += row
        removals += 1
        size -= 1
    return np.flatnonzero(alive).astype(np.int64), removals


def count_dominated(samples: np.ndarray, front: np.ndarray) -> int:
    """Number of sample rows weakly dominated by at least one front row."""
    samples = np.asarray(samples, dtype=np.float64)
    front = np.asarray(front, dtype=np.float64)
    covered = np.zeros(samples.shape[0], dtype=bool)
    for p in front:
        covered |= np.all(samples >= p, axis=1)
    return int(covered.sum())
