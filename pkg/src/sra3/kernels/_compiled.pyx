# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled pairwise-indicator kernels.

Accumulation order is ascending-index sequential everywhere, matching
numpy_backend.py exactly so both backends return bit-identical floats.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

ctypedef fused real_t:
    double
    long double


def eps_matrix(double[:, ::1] F not None):
    """E[i, j] = max_k (F[i, k] - F[j, k])."""
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t m = F.shape[1]
    out = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] E = out
    cdef Py_ssize_t i, j, k
    cdef double v, d
    for i in range(n):
        for j in range(n):
            v = F[i, 0] - F[j, 0]
            for k in range(1, m):
                d = F[i, k] - F[j, k]
                if d > v:
                    v = d
            E[i, j] = v
    return out


def sde_matrix(double[:, ::1] F not None):
    """D[i, j] = || positive part of (F[j] - F[i]) ||_2."""
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t m = F.shape[1]
    out = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] D = out
    cdef Py_ssize_t i, j, k
    cdef double s, d
    for i in range(n):
        for j in range(n):
            s = 0.0
            for k in range(m):
                d = F[j, k] - F[i, k]
                if d > 0.0:
                    s += d * d
                else:
                    s += 0.0
            D[i, j] = sqrt(s)
    return out


def nondominated_mask(double[:, ::1] F not None):
    """Mask of rows not strictly Pareto-dominated by any other row."""
    cdef Py_ssize_t n = F.shape[0]
    cdef Py_ssize_t m = F.shape[1]
    out = np.ones(n, dtype=np.bool_)
    cdef cnp.uint8_t[::1] mask = out.view(np.uint8)
    cdef Py_ssize_t i, j, k
    cdef bint leq, lt
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            leq = True
            lt = False
            for k in range(m):
                if F[j, k] > F[i, k]:
                    leq = False
                    break
                if F[j, k] < F[i, k]:
                    lt = True
            if leq and lt:
                mask[i] = 0
                break
    return out


def colsum_zero_diag(real_t[:, ::1] T not None):
    """Column sums of T with a zero added in place of the diagonal entry."""
    cdef Py_ssize_t n = T.shape[0]
    if real_t is double:
        out = np.zeros(n, dtype=np.float64)
    else:
        out = np.zeros(n, dtype=np.longdouble)
    cdef real_t[::1] acc = out
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i == j:
                acc[j] += 0.0
            else:
                acc[j] += T[i, j]
    return out


def rowsum_zero_diag(real_t[:, ::1] T not None):
    """Row sums of T with a zero added in place of the diagonal entry."""
    cdef Py_ssize_t n = T.shape[0]
    if real_t is double:
        out = np.zeros(n, dtype=np.float64)
    else:
        out = np.zeros(n, dtype=np.longdouble)
    cdef real_t[::1] acc = out
    cdef Py_ssize_t i, j
    for j in range(n):
        for i in range(n):
            if i == j:
                acc[i] += 0.0
            else:
                acc[i] += T[i, j]
    return out


def ca_reduce(double[:, ::1] W not None, Py_ssize_t keep):
    """Worst-out reduction on W[i, j] = exp(-E[i, j] / (c*k)); see numpy twin."""
    cdef Py_ssize_t n = W.shape[0]
    if keep < 1 or keep > n:
        raise ValueError(f"keep must be in [1, {n}], got {keep}")
    fit_arr = np.zeros(n, dtype=np.float64)
    cdef double[::1] fit = fit_arr
    alive_arr = np.ones(n, dtype=np.uint8)
    cdef cnp.uint8_t[::1] alive = alive_arr
    cdef Py_ssize_t i, j, worst, size, removals
    cdef double worst_fit
    for i in range(n):
        for j in range(n):
            if i == j:
                fit[j] -= 0.0
            else:
                fit[j] -= W[i, j]
    size = n
    removals = 0
    while size > keep:
        worst = -1
        worst_fit = 0.0
        for i in range(n):
            if alive[i] and (worst < 0 or fit[i] < worst_fit):
                worst = i
                worst_fit = fit[i]
        alive[worst] = 0
        for j in range(n):
            if alive[j]:
                fit[j] += W[worst, j]
        removals += 1
        size -= 1
    survivors = np.flatnonzero(alive_arr).astype(np.int64)
    return survivors, removals


def count_dominated(double[:, ::1] samples not None, double[:, ::1] front not None):
    """Number of sample rows weakly dominated by at least one front row."""
    cdef Py_ssize_t ns = samples.shape[0]
    cdef Py_ssize_t nf = front.shape[0]
    cdef Py_ssize_t m = samples.shape[1]
    if nf > 0 and front.shape[1] != m:
        raise ValueError("dimension mismatch between samples and front")
    cdef Py_ssize_t i, j, k, count
    cdef bint covers
    count = 0
    for i in range(ns):
        for j in range(nf):
            covers = True
            for k in range(m):
                if samples[i, k] < front[j, k]:
                    covers = False
                    break
            if covers:
                count += 1
                break
    return count
