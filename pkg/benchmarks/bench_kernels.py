"""Compare the numba and numpy divisibility kernels.

    python benchmarks/bench_kernels.py [--rows 2000] [--vars 7] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from initideal.monoideal import _kernels as K


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--vars", type=int, default=7)
    ap.add_argument("--max-exp", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    E = rng.integers(0, args.max_exp + 1, size=(args.rows, args.vars), dtype=np.int64)
    G = E[: args.rows // 10]

    cases = {"minimal_mask": ((E,), K.minimal_mask_numpy),
             "contains_mask": ((G, E), K.contains_mask_numpy)}
    if K.HAVE_NUMBA:
        cases["minimal_mask"] += (K.minimal_mask_numba,)
        cases["contains_mask"] += (K.contains_mask_numba,)

    print(f"rows={args.rows} vars={args.vars} max_exp={args.max_exp} backend={K.BACKEND}")
    for name, (inputs, *fns) in cases.items():
        results = [fn(*inputs) for fn in fns]  # also warms up the JIT
        assert all(np.array_equal(results[0], r) for r in results[1:])
        for label, fn in zip(("numpy", "numba"), fns):
            best = min(timeit.repeat(lambda: fn(*inputs), number=1, repeat=args.repeat))
            print(f"{name:14s} {label:6s} {best * 1e3:9.2f} ms")


if __name__ == "__main__":
    main()
