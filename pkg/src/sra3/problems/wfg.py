"""WFG1-9 scalable test problems, vectorized over populations.

Each problem takes decision vectors z with z_i in [0, 2i], normalizes them
to the unit cube, pushes them through its chain of shift/bias/reduction
transformations, and maps the resulting parameters onto its front shape.
The first k variables are position-related (k must be a multiple of m - 1),
the remaining l distance-related (l even, as WFG2/WFG3 reduce them in
pairs).
"""

from __future__ import annotations

import numpy as np

HALF_PI = 0.5 * np.pi
_EPS01 = 1.0e-10


def _correct01(y: np.ndarray) -> np.ndarray:
    # Forgive epsilon-sized excursions created by the float transformations.
    y[(y < 0.0) & (y >= -_EPS01)] = 0.0
    y[(y > 1.0) & (y <= 1.0 + _EPS01)] = 1.0
    return y


# ---------------------------------------------------------------------------
# transformations (elementwise)

def s_linear(y: np.ndarray, A: float) -> np.ndarray:
    return _correct01(np.abs(y - A) / np.abs(np.floor(A - y) + A))


def s_decept(y: np.ndarray, A: float, B: float, C: float) -> np.ndarray:
    tmp1 = np.floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B)
    tmp2 = np.floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B)
    return _correct01(1.0 + (np.abs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B))


def s_multi(y: np.ndarray, A: float, B: float, C: float) -> np.ndarray:
    tmp1 = np.abs(y - C) / (2.0 * (np.floor(C - y) + C))
    tmp2 = (4.0 * A + 2.0) * np.pi * (0.5 - tmp1)
    return _correct01((1.0 + np.cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0))


def b_flat(y: np.ndarray, A: float, B: float, C: float) -> np.ndarray:
    ret = (
        A
        + np.minimum(0.0, np.floor(y - B)) * A * (B - y) / B
        - np.minimum(0.0, np.floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C)
    )
    return _correct01(ret)


def b_poly(y: np.ndarray, alpha: float) -> np.ndarray:
    return _correct01(y**alpha)


def b_param(y: np.ndarray, u: np.ndarray, A: float, B: float, C: float) -> np.ndarray:
    v = A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A)
    return _correct01(y ** (B + (C - B) * v))


# ---------------------------------------------------------------------------
# reductions (collapse a window of columns to one)

def r_sum(Y: np.ndarray, w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=np.float64)
    return _correct01(Y @ w / np.sum(w))


def r_sum_uniform(Y: np.ndarray) -> np.ndarray:
    return _correct01(np.sum(Y, axis=1) / Y.shape[1])


def r_nonsep(Y: np.ndarray, A: int) -> np.ndarray:
    pop, cols = Y.shape
    num = np.zeros(pop, dtype=np.float64)
    for j in range(cols):
        num += Y[:, j]
        for step in range(A - 1):
            num += np.abs(Y[:, j] - Y[:, (j + step + 1) % cols])
    half = np.ceil(A / 2.0)
    denom = cols / A * half * (1.0 + 2.0 * A - 2.0 * half)
    return _correct01(num / denom)


# ---------------------------------------------------------------------------
# front shapes (X: (pop, m - 1) position parameters -> one h column per call
# would be wasteful; these return the full (pop, m) shape matrix)

def shape_linear(X: np.ndarray) -> np.ndarray:
    pop, mm1 = X.shape
    m = mm1 + 1
    H = np.empty((pop, m), dtype=np.float64)
    cum = np.cumprod(X, axis=1)
    H[:, 0] = cum[:, m - 2]
    for i in range(1, m - 1):
        H[:, i] = cum[:, m - 2 - i] * (1.0 - X[:, m - 1 - i])
    H[:, m - 1] = 1.0 - X[:, 0]
    return H


def shape_convex(X: np.ndarray) -> np.ndarray:
    pop, mm1 = X.shape
    m = mm1 + 1
    a = 1.0 - np.cos(X * HALF_PI)
    b = 1.0 - np.sin(X * HALF_PI)
    H = np.empty((pop, m), dtype=np.float64)
    cum = np.cumprod(a, axis=1)
    H[:, 0] = cum[:, m - 2]
    for i in range(1, m - 1):
        H[:, i] = cum[:, m - 2 - i] * b[:, m - 1 - i]
    H[:, m - 1] = b[:, 0]
    return H


def shape_concave(X: np.ndarray) -> np.ndarray:
    pop, mm1 = X.shape
    m = mm1 + 1
    s = np.sin(X * HALF_PI)
    c = np.cos(X * HALF_PI)
    H = np.empty((pop, m), dtype=np.float64)
    cum = np.cumprod(s, axis=1)
    H[:, 0] = cum[:, m - 2]
    for i in range(1, m - 1):
        H[:, i] = cum[:, m - 2 - i] * c[:, m - 1 - i]
    H[:, m - 1] = c[:, 0]
    return H


def shape_mixed(x1: np.ndarray, alpha: float, A: int) -> np.ndarray:
    two_api = 2.0 * A * np.pi
    return (1.0 - x1 - np.cos(two_api * x1 + HALF_PI) / two_api) ** alpha


def shape_disconnected(x1: np.ndarray, alpha: float, beta: float, A: int) -> np.ndarray:
    return 1.0 - x1**alpha * np.cos(A * np.pi * x1**beta) ** 2


# ---------------------------------------------------------------------------
# assembly helpers

def _normalize(Z: np.ndarray) -> np.ndarray:
    n = Z.shape[1]
    return _correct01(Z / (2.0 * np.arange(1, n + 1, dtype=np.float64)))


def _post(T: np.ndarray, degenerate: bool) -> np.ndarray:
    """Map transition parameters to front-position parameters.

    The last column is the distance parameter; columns whose degeneracy
    weight is zero collapse toward 0.5 as the distance parameter goes to
    zero (only WFG3 uses that, with weights (1, 0, ..., 0)).
    """
    pop, m = T.shape
    X = np.empty_like(T)
    tm = T[:, m - 1]
    for i in range(m - 1):
        a_i = 1.0 if (i == 0 or not degenerate) else 0.0
        X[:, i] = np.maximum(tm, a_i) * (T[:, i] - 0.5) + 0.5
    X[:, m - 1] = tm
    return X


def _scale_to_front(X: np.ndarray, H: np.ndarray) -> np.ndarray:
    m = H.shape[1]
    S = 2.0 * np.arange(1, m + 1, dtype=np.float64)
    return X[:, [m - 1]] + S * H


def _positional_groups(y: np.ndarray, k: int, m: int) -> list[np.ndarray]:
    gap = k // (m - 1)
    return [y[:, g * gap : (g + 1) * gap] for g in range(m - 1)]


# ---------------------------------------------------------------------------
# the nine problems

def wfg1(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    n = Z.shape[1]
    y = _normalize(Z)
    y[:, k:] = s_linear(y[:, k:], 0.35)
    y[:, k:] = b_flat(y[:, k:], 0.8, 0.75, 0.85)
    y = b_poly(y, 0.02)
    w = 2.0 * np.arange(1, n + 1, dtype=np.float64)
    gap = k // (m - 1)
    cols = [r_sum(y[:, g * gap : (g + 1) * gap], w[g * gap : (g + 1) * gap]) for g in range(m - 1)]
    cols.append(r_sum(y[:, k:], w[k:]))
    T = np.column_stack(cols)
    X = _post(T, degenerate=False)
    H = shape_convex(X[:, : m - 1])
    H[:, m - 1] = shape_mixed(X[:, 0], alpha=1.0, A=5)
    return _scale_to_front(X, H)


def _wfg2_transitions(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    n = Z.shape[1]
    y = _normalize(Z)
    y[:, k:] = s_linear(y[:, k:], 0.35)
    pairs = [r_nonsep(y[:, k + 2 * i : k + 2 * i + 2], 2) for i in range((n - k) // 2)]
    y = np.column_stack([y[:, :k]] + pairs)
    cols = [r_sum_uniform(g) for g in _positional_groups(y, k, m)]
    cols.append(r_sum_uniform(y[:, k:]))
    return np.column_stack(cols)


def wfg2(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    X = _post(_wfg2_transitions(Z, m, k), degenerate=False)
    H = shape_convex(X[:, : m - 1])
    H[:, m - 1] = shape_disconnected(X[:, 0], alpha=1.0, beta=1.0, A=5)
    return _scale_to_front(X, H)


def wfg3(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    X = _post(_wfg2_transitions(Z, m, k), degenerate=True)
    return _scale_to_front(X, shape_linear(X[:, : m - 1]))


def _reduce_uniform(y: np.ndarray, k: int, m: int) -> np.ndarray:
    cols = [r_sum_uniform(g) for g in _positional_groups(y, k, m)]
    cols.append(r_sum_uniform(y[:, k:]))
    return np.column_stack(cols)


def wfg4(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    y = s_multi(_normalize(Z), 30.0, 10.0, 0.35)
    X = _post(_reduce_uniform(y, k, m), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


def wfg5(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    y = s_decept(_normalize(Z), 0.35, 0.001, 0.05)
    X = _post(_reduce_uniform(y, k, m), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


def wfg6(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    n = Z.shape[1]
    y = _normalize(Z)
    y[:, k:] = s_linear(y[:, k:], 0.35)
    gap = k // (m - 1)
    cols = [r_nonsep(g, gap) for g in _positional_groups(y, k, m)]
    cols.append(r_nonsep(y[:, k:], n - k))
    X = _post(np.column_stack(cols), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


def wfg7(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    n = Z.shape[1]
    y = _normalize(Z)
    # position vars biased by the mean of all succeeding vars, back to front
    # so each column sees the original values of its successors
    out = y.copy()
    for i in range(k):
        u = r_sum_uniform(y[:, i + 1 :])
        out[:, i] = b_param(y[:, i], u, 0.98 / 49.98, 0.02, 50.0)
    y = out
    y[:, k:] = s_linear(y[:, k:], 0.35)
    X = _post(_reduce_uniform(y, k, m), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


def wfg8(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    y = _normalize(Z)
    out = y.copy()
    for i in range(k, y.shape[1]):
        u = r_sum_uniform(y[:, :i])
        out[:, i] = b_param(y[:, i], u, 0.98 / 49.98, 0.02, 50.0)
    y = out
    y[:, k:] = s_linear(y[:, k:], 0.35)
    X = _post(_reduce_uniform(y, k, m), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


def wfg9(Z: np.ndarray, m: int, k: int) -> np.ndarray:
    n = Z.shape[1]
    y = _normalize(Z)
    out = y.copy()
    for i in range(n - 1):
        u = r_sum_uniform(y[:, i + 1 :])
        out[:, i] = b_param(y[:, i], u, 0.98 / 49.98, 0.02, 50.0)
    y = out
    y[:, :k] = s_decept(y[:, :k], 0.35, 0.001, 0.05)
    y[:, k:] = s_multi(y[:, k:], 30.0, 95.0, 0.35)
    gap = k // (m - 1)
    cols = [r_nonsep(g, gap) for g in _positional_groups(y, k, m)]
    cols.append(r_nonsep(y[:, k:], n - k))
    X = _post(np.column_stack(cols), degenerate=False)
    return _scale_to_front(X, shape_concave(X[:, : m - 1]))


# ---------------------------------------------------------------------------
# Pareto-optimal distance variables (normalized space), used to sample
# reference fronts. For WFG1-7 every distance variable is optimal at 0.35;
# WFG8/WFG9's parameter-dependent bias makes them functions of the other
# variables.

def optimal_distance_values(name: str, y_position: np.ndarray, n: int) -> np.ndarray:
    pop, k = y_position.shape
    l = n - k
    A, B, C = 0.98 / 49.98, 0.02, 50.0
    if name == "WFG8":
        y = np.empty((pop, n), dtype=np.float64)
        y[:, :k] = y_position
        for i in range(k, n):
            u = r_sum_uniform(y[:, :i])
            v = A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A)
            y[:, i] = 0.35 ** (1.0 / (B + (C - B) * v))
        return y[:, k:]
    if name == "WFG9":
        d = np.empty((pop, l), dtype=np.float64)
        d[:, l - 1] = 0.35
        for j in range(l - 2, -1, -1):
            u = np.sum(d[:, j + 1 :], axis=1) / (l - 1 - j)
            v = A - (1.0 - 2.0 * u) * np.abs(np.floor(0.5 - u) + A)
            d[:, j] = 0.35 ** (1.0 / (B + (C - B) * v))
        return d
    return np.full((pop, l), 0.35, dtype=np.float64)
