"""Time the integer kernels on the numba path against the numpy path.

    python benchmarks/bench_kernels.py [--repeat 5]

Both paths live in ``trihopf._kernels`` regardless of the env flag, so one
process can time them side by side. The first numba call per kernel is
reported separately as compile/cache-load time.
"""
import argparse
import time

import numpy as np

from trihopf import _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(rng):
    grids = [rng.integers(0, 5, size=(k, l)).astype(np.int64) for k in range(1, 9) for l in range(1, 9)
             for _ in range(20)]
    perms = [(rng.permutation(n).astype(np.int64) + 1, rng.integers(1, 6, size=n).astype(np.int64))
             for n in (50, 100, 200) for _ in range(20)]
    boxes = [(k, l) for k in range(1, 21) for l in range(1, 21) if k * l <= 400]
    return {
        "box_partition_counts": (lambda f: [f(k, l) for k, l in boxes]),
        "weighted_inversions": (lambda f: [f(p, w) for p, w in perms]),
        "shift_dimension": (lambda f: [f(g) for g in grids]),
        "unipotent_dims": (lambda f: [f(g) for g in grids]),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not K.HAS_NUMBA:
        raise SystemExit("numba path unavailable (not installed or TRIHOPF_DISABLE_NUMBA set)")

    rng = np.random.default_rng(args.seed)
    print("%-22s %12s %12s %12s %9s" % ("kernel", "first nb (s)", "numba (s)", "numpy (s)", "speedup"))
    for name, run in workloads(rng).items():
        nb = getattr(K, name + "_nb")
        np_ = getattr(K, name + "_np")
        t0 = time.perf_counter()
        run(nb)
        first = time.perf_counter() - t0
        t_nb = best_of(lambda: run(nb), args.repeat)
        t_np = best_of(lambda: run(np_), args.repeat)
        print("%-22s %12.4f %12.4f %12.4f %8.1fx" % (name, first, t_nb, t_np, t_np / t_nb))


if __name__ == "__main__":
    main()
