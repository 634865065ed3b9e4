"""Compare the compiled and numpy kernel backends on realistic workloads.

Runs every kernel once per backend on identical inputs, asserts the outputs
are bit-identical, then reports best-of-N wall times and the speedup. Sizes
default to the shape the optimizer actually produces: a union pool of 2N
points at N=210 and m=5, plus one Monte Carlo hypervolume chunk.

Usage: python3 benchmarks/bench_kernels.py [--capacity 210] [--objectives 5]
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from sra3 import kernels
from sra3.indicators import EpsParams


def _best(fn, repeats: int, loops: int) -> float:
    return min(timeit.repeat(fn, number=loops, repeat=repeats)) / loops


def _workloads(capacity: int, m: int, seed: int) -> dict:
    rng = np.random.default_rng(seed)
    pool = rng.random((2 * capacity, m))
    E = kernels.eps_matrix(pool)
    scale = float(np.abs(E).max()) * EpsParams().k
    W = np.exp(-E / scale)
    samples = rng.random((1 << 17, m))
    front = rng.random((capacity, m)) * 0.5
    return {
        "eps_matrix": (kernels.eps_matrix, (pool,)),
        "sde_matrix": (kernels.sde_matrix, (pool,)),
        "nondominated_mask": (kernels.nondominated_mask, (pool,)),
        "colsum_zero_diag": (kernels.colsum_zero_diag, (E,)),
        "rowsum_zero_diag": (kernels.rowsum_zero_diag, (E,)),
        "ca_reduce": (kernels.ca_reduce, (W, capacity)),
        "count_dominated": (kernels.count_dominated, (samples, front)),
    }


def _assert_equal(name: str, a, b) -> None:
    if name == "ca_reduce":
        ok = np.array_equal(a[0], b[0]) and a[1] == b[1]
    elif name == "count_dominated":
        ok = a == b
    else:
        ok = np.array_equal(np.asarray(a), np.asarray(b))
    if not ok:
        raise AssertionError(f"backends disagree on {name}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--capacity", type=int, default=210, help="archive capacity N")
    parser.add_argument("--objectives", type=int, default=5, help="objective count m")
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats per kernel")
    parser.add_argument("--loops", type=int, default=3, help="calls per repeat")
    parser.add_argument("--seed", type=int, default=52, help="workload seed")
    args = parser.parse_args(argv)

    if "compiled" not in kernels.available_backends():
        print("compiled backend unavailable; nothing to compare", file=sys.stderr)
        return 1

    work = _workloads(args.capacity, args.objectives, args.seed)
    print(
        f"pool {2 * args.capacity} x {args.objectives}, keep {args.capacity}, "
        f"best of {args.repeats} x {args.loops}"
    )
    print(f"{'kernel':<20} {'numpy':>12} {'compiled':>12} {'speedup':>9}")

    previous = kernels.active_backend()
    try:
        for name, (fn, call_args) in work.items():
            results = {}
            times = {}
            for backend in ("numpy", "compiled"):
                kernels.use_backend(backend)
                results[backend] = fn(*call_args)
                times[backend] = _best(lambda: fn(*call_args), args.repeats, args.loops)
            _assert_equal(name, results["numpy"], results["compiled"])
            ratio = times["numpy"] / times["compiled"]
            print(
                f"{name:<20} {times['numpy'] * 1e3:>10.3f}ms {times['compiled'] * 1e3:>10.3f}ms "
                f"{ratio:>8.1f}x"
            )
    finally:
        kernels.use_backend(previous)
    print("all kernels agree across backends")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
