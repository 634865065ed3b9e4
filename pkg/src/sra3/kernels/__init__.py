"""Backend selection for the pairwise-indicator kernels.

Two interchangeable implementations exist: a Cython extension
(``sra3.kernels._compiled``) and a pure-numpy fallback
(``sra3.kernels.numpy_backend``). The compiled one is picked at import when
available; set ``SRA3_PURE_PYTHON=1`` to force the fallback, or call
:func:`use_backend` at runtime. Both produce bit-identical results (see the
backend modules); the choice only affects speed.
"""

from __future__ import annotations

import os

import numpy as np

from . import numpy_backend

try:
    from . import _compiled as compiled_backend
except ImportError:  # extension not built; fall back silently
    compiled_backend = None

__all__ = [
    "eps_matrix",
    "sde_matrix",
    "nondominated_mask",
    "colsum_zero_diag",
    "rowsum_zero_diag",
    "ca_reduce",
    "count_dominated",
    "active_backend",
    "available_backends",
    "use_backend",
    "numpy_backend",
    "compiled_backend",
]

_BACKENDS = {"numpy": numpy_backend}
if compiled_backend is not None:
    _BACKENDS["compiled"] = compiled_backend

if compiled_backend is not None and not os.environ.get("SRA3_PURE_PYTHON"):
    _active = compiled_backend
else:
    _active = numpy_backend


def active_backend() -> str:
    """Name of the backend currently serving kernel calls."""
    return "compiled" if _active is compiled_backend else "numpy"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use_backend(name: str) -> None:
    """Switch backends at runtime (mainly for tests and benchmarks)."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active = _BACKENDS[name]


def _c2d(F) -> np.ndarray:
    F = np.ascontiguousarray(F, dtype=np.float64)
    if F.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {F.shape}")
    return F


def eps_matrix(F) -> np.ndarray:
    return _active.eps_matrix(_c2d(F))


def sde_matrix(F) -> np.ndarray:
    return _active.sde_matrix(_c2d(F))


def nondominated_mask(F) -> np.ndarray:
    return np.asarray(_active.nondominated_mask(_c2d(F)), dtype=bool)


def colsum_zero_diag(T) -> np.ndarray:
    T = np.ascontiguousarray(T)
    return _active.colsum_zero_diag(T)


def rowsum_zero_diag(T) -> np.ndarray:
    T = np.ascontiguousarray(T)
    return _active.rowsum_zero_diag(T)


def ca_reduce(W, keep: int) -> tuple[np.ndarray, int]:
    return _active.ca_reduce(_c2d(W), int(keep))


def count_dominated(samples, front) -> int:
    return int(_active.count_dominated(_c2d(samples), _c2d(front)))
