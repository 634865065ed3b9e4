"""Backend agreement: the compiled and numpy kernels must match bit for bit,
so selection decisions never depend on which one is active."""

from __future__ import annotations

import subprocess
import sys

import numpy as np
import pytest

from sra3 import kernels

from _oracles import nondominated_brute


def _instances():
    rng = np.random.default_rng(2024)
    yield rng.random((7, 3))
    yield rng.random((20, 5)) * 100.0
    yield rng.random((3, 2)) - 0.5
    # exact ties and duplicate rows
    F = rng.integers(0, 3, (12, 3)).astype(np.float64)
    F[5] = F[2]
    F[9] = F[0]
    yield F
    yield np.zeros((6, 4))


def test_compiled_backend_is_available():
    assert "compiled" in kernels.available_backends()
    assert kernels.active_backend() == "compiled"


def test_use_backend_rejects_unknown_names():
    with pytest.raises(ValueError, match="unknown backend"):
        kernels.use_backend("nope")


def test_backends_bit_identical_on_pairwise_matrices():
    for F in _instances():
        results = {}
        for name in kernels.available_backends():
            kernels.use_backend(name)
            results[name] = (
                kernels.eps_matrix(F),
                kernels.sde_matrix(F),
                kernels.nondominated_mask(F),
            )
        ref = results["numpy"]
        for name, (E, D, mask) in results.items():
            assert np.array_equal(E, ref[0]), name
            assert np.array_equal(D, ref[1]), name
            assert np.array_equal(mask, ref[2]), name


def test_backends_bit_identical_on_sums_and_reduction():
    rng = np.random.default_rng(7)
    for n in (5, 17, 40):
        T = rng.random((n, n)) * 3.0 - 1.0
        W = np.exp(rng.random((n, n)) * 2.0)
        keep = max(1, n // 2)
        results = {}
        for name in kernels.available_backends():
            kernels.use_backend(name)
            results[name] = (
                kernels.colsum_zero_diag(T),
                kernels.rowsum_zero_diag(T),
                kernels.ca_reduce(W, keep),
            )
        ref = results["numpy"]
        for name, (cs, rs, (idx, removals)) in results.items():
            assert np.array_equal(cs, ref[0]), name
            assert np.array_equal(rs, ref[1]), name
            assert np.array_equal(idx, ref[2][0]), name
            assert removals == ref[2][1] == n - keep, name


def test_backends_bit_identical_on_count_dominated():
    rng = np.random.default_rng(11)
    samples = rng.random((500, 4))
    front = rng.random((30, 4))
    counts = set()
    for name in kernels.available_backends():
        kernels.use_backend(name)
        counts.add(kernels.count_dominated(samples, front))
    assert len(counts) == 1


def test_eps_matrix_against_direct_formula():
    rng = np.random.default_rng(3)
    F = rng.random((9, 4))
    E = kernels.eps_matrix(F)
    for i in range(9):
        for j in range(9):
            assert E[i, j] == np.max(F[i] - F[j])


def test_sde_matrix_against_direct_formula():
    rng = np.random.default_rng(4)
    F = rng.random((8, 3))
    D = kernels.sde_matrix(F)
    for i in range(8):
        for j in range(8):
            shifted = np.maximum(F[j] - F[i], 0.0)
            assert D[i, j] == pytest.approx(np.sqrt(np.sum(shifted**2)), rel=1e-15)
    assert np.all(np.diag(D) == 0.0)


def test_nondominated_mask_against_brute_force():
    rng = np.random.default_rng(5)
    for _ in range(5):
        F = rng.random((25, 3))
        mask = kernels.nondominated_mask(F)
        assert sorted(np.flatnonzero(mask)) == nondominated_brute(F.tolist())


def test_nondominated_mask_keeps_duplicates():
    F = np.array([[0.0, 1.0], [0.0, 1.0], [2.0, 2.0]])
    assert kernels.nondominated_mask(F).tolist() == [True, True, False]


def test_colsum_excludes_diagonal():
    T = np.arange(9, dtype=np.float64).reshape(3, 3) + 1.0
    # column sums without the diagonal entries 1, 5, 9
    assert kernels.colsum_zero_diag(T).tolist() == [4.0 + 7.0, 2.0 + 8.0, 3.0 + 6.0]
    assert kernels.rowsum_zero_diag(T).tolist() == [2.0 + 3.0, 4.0 + 6.0, 7.0 + 8.0]


def test_ca_reduce_uniform_weights_removes_lowest_indices_first():
    # all-equal weights make every fitness tie; removal should walk 0,1,2,...
    W = np.ones((6, 6))
    idx, removals = kernels.ca_reduce(W, 2)
    assert idx.tolist() == [4, 5]
    assert removals == 4


def test_ca_reduce_keep_equals_n_is_identity():
    W = np.ones((4, 4))
    idx, removals = kernels.ca_reduce(W, 4)
    assert idx.tolist() == [0, 1, 2, 3]
    assert removals == 0


def test_ca_reduce_rejects_bad_keep():
    W = np.ones((4, 4))
    for keep in (0, 5, -1):
        with pytest.raises(ValueError):
            kernels.ca_reduce(W, keep)


def test_eps_matrix_rejects_non_2d():
    with pytest.raises(ValueError):
        kernels.eps_matrix(np.zeros(5))


def test_pure_python_env_override_selects_numpy_backend():
    code = (
        "import sra3.kernels as k; "
        "print(k.active_backend(), sorted(k.available_backends()))"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"SRA3_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.split()[0] == "numpy"
