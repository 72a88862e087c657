"""Compare the compiled sieve with the numpy fallback.

    python benchmarks/bench_sieve.py [--a-max N] [--repeat R]

Times the raw kernels on one numerator range, then the full point search
for the three worked examples with each backend.
"""
import argparse
import time

import numpy as np

from fermat_descent import point_search
from fermat_descent import _sieve_np
from fermat_descent.curve import build_curve
from fermat_descent.equation import FermatEquation
from fermat_descent.point_search import SearchBounds, search

EQUATIONS = {
    "123,125,121,5": FermatEquation(123, 125, 121, 5),
    "2,9,11,5": FermatEquation(2, 9, 11, 5),
    "16,9,7,5": FermatEquation(16, 9, 7, 5),
}


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--a-max", type=int, default=10 ** 6)
    parser.add_argument("--d-max", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"numpy": _sieve_np.sieve_range}
    if point_search._compiled_sieve is not None:
        backends["cython"] = point_search._compiled_sieve
    else:
        print("compiled sieve not built; only the numpy fallback is timed")

    k = build_curve(EQUATIONS["123,125,121,5"]).integral_constant
    tables = point_search._tables(k, 5)
    print(f"raw kernel, a in [-{args.a_max}, {args.a_max}]")
    survivors = {}
    for name, kernel in backends.items():
        t, out = best_of(lambda: kernel(-args.a_max, args.a_max, *tables), args.repeat)
        survivors[name] = out
        rate = (2 * args.a_max + 1) / t / 1e6
        print(f"  {name:7s} {t * 1000:9.1f} ms  {rate:8.1f} M numerators/s  {out.size} survivors")
    if len(survivors) == 2:
        assert np.array_equal(survivors["numpy"], survivors["cython"])

    bounds = SearchBounds(args.d_max, args.a_max)
    print(f"full search, d_max={bounds.d_max}, a_max={bounds.a_max}")
    original = point_search._sieve_range
    try:
        for label, eq in EQUATIONS.items():
            m = build_curve(eq)
            row = []
            for name, kernel in backends.items():
                point_search._sieve_range = kernel
                t, res = best_of(lambda: search(m, bounds), args.repeat)
                row.append(f"{name} {t:6.3f} s ({len(res.points)} pts)")
            print(f"  {label:15s} " + "   ".join(row))
    finally:
        point_search._sieve_range = original


if __name__ == "__main__":
    main()
