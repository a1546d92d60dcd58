"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py [--p 3 --m 3] [--repeat 5]

Both backends run in the same process; the numba kernels are compiled
before timing starts.
"""

import argparse
import time

import numpy as np

from hermcodes import _kernels
from hermcodes.code_construct import build_code, codeword_basis
from hermcodes.finite_field import CodeParams, build_field


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    params = CodeParams(args.p, args.m)
    ctx = build_field(params)
    basis = codeword_basis(build_code(params, ctx), ctx)
    total = args.p ** basis.shape[0]

    print(f"p={args.p} m={args.m}: {total} codewords of length {basis.shape[1]}, field order {ctx.order}")
    print(f"{'kernel':<14}{'backend':<9}{'best (s)':>12}")
    results = {}
    for name, impl in _kernels.KERNELS.items():
        impl["span_profile"](basis[:2], args.p, 0, args.p**2)  # compile
        impl["exp_table"](args.p, 2, np.array([1, 1, 1], dtype=np.int64))
        span_t, span_out = best_of(lambda: impl["span_profile"](basis, args.p, 0, total), args.repeat)
        exp_t, exp_out = best_of(
            lambda: impl["exp_table"](args.p, ctx.degree, np.asarray(ctx.modulus.coeffs, dtype=np.int64)),
            args.repeat,
        )
        results[name] = (np.asarray(span_out[0]), int(span_out[1]), np.asarray(exp_out))
        print(f"{'span_profile':<14}{name:<9}{span_t:>12.4f}")
        print(f"{'exp_table':<14}{name:<9}{exp_t:>12.4f}")

    a, b = results["numba"], results["numpy"]
    same = np.array_equal(a[0], b[0]) and a[1] == b[1] and np.array_equal(a[2], b[2])
    print("backends agree" if same else "BACKENDS DISAGREE")
    return 0 if same else 1


if __name__ == "__main__":
    raise SystemExit(main())
