"""DTLZ1-4 scalable test problems, vectorized over populations.

Decision vectors live in [0, 1]^n with n = m + k - 1: the first m - 1
variables set the position on the front, the remaining k control the
distance to it (g = 0 on the true front).
"""

from __future__ import annotations

import numpy as np

TWO_PI_TIMES_10 = 20.0 * np.pi


def _g_rastrigin(Xm: np.ndarray) -> np.ndarray:
    """Multimodal distance function of DTLZ1/DTLZ3; zero at x = 0.5."""
    k = Xm.shape[1]
    z = Xm - 0.5
    return 100.0 * (k + np.sum(z * z - np.cos(TWO_PI_TIMES_10 * z), axis=1))


def _g_sphere(Xm: np.ndarray) -> np.ndarray:
    """Unimodal distance function of DTLZ2/DTLZ4; zero at x = 0.5."""
    z = Xm - 0.5
    return np.sum(z * z, axis=1)


def _simplex_objectives(P: np.ndarray, g: np.ndarray) -> np.ndarray:
    """F with sum(F) = 0.5 * (1 + g); P holds the m - 1 position variables."""
    pop, mm1 = P.shape
    m = mm1 + 1
    F = np.empty((pop, m), dtype=np.float64)
    base = 0.5 * (1.0 + g)
    cum = np.cumprod(P, axis=1)
    F[:, 0] = base * cum[:, m - 2]
    for i in range(1, m - 1):
        F[:, i] = base * cum[:, m - 2 - i] * (1.0 - P[:, m - 1 - i])
    F[:, m - 1] = base * (1.0 - P[:, 0])
    return F


def _hypersphere_objectives(P: np.ndarray, g: np.ndarray) -> np.ndarray:
    """F with ||F|| = 1 + g; P holds the m - 1 position variables."""
    pop, mm1 = P.shape
    m = mm1 + 1
    theta = P * (0.5 * np.pi)
    cos = np.cos(theta)
    sin = np.sin(theta)
    F = np.empty((pop, m), dtype=np.float64)
    base = 1.0 + g
    cum = np.cumprod(cos, axis=1)
    F[:, 0] = base * cum[:, m - 2]
    for i in range(1, m - 1):
        F[:, i] = base * cum[:, m - 2 - i] * sin[:, m - 1 - i]
    F[:, m - 1] = base * sin[:, 0]
    return F


def dtlz1(X: np.ndarray, m: int) -> np.ndarray:
    g = _g_rastrigin(X[:, m - 1:])
    return _simplex_objectives(X[:, : m - 1], g)


def dtlz2(X: np.ndarray, m: int) -> np.ndarray:
    g = _g_sphere(X[:, m - 1:])
    return _hypersphere_objectives(X[:, : m - 1], g)


def dtlz3(X: np.ndarray, m: int) -> np.ndarray:
    g = _g_rastrigin(X[:, m - 1:])
    return _hypersphere_objectives(X[:, : m - 1], g)


def dtlz4(X: np.ndarray, m: int, alpha: float = 100.0) -> np.ndarray:
    g = _g_sphere(X[:, m - 1:])
    return _hypersphere_objectives(X[:, : m - 1] ** alpha, g)
