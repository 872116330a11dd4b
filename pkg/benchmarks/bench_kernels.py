#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs identical workloads through both backends and prints wall-clock
times with the speedup ratio.  Workloads mirror what the verification
grid actually does: brute-force oracle sums, Stirling-triangle
construction, and the five closed-form routes over a (k, n) grid.

Usage:
    python benchmarks/bench_kernels.py [--kmax 15] [--nmax 150] [--repeats 3]
"""

import argparse
import time

from powersum._kernels import pykernels
from powersum.combinatorics import coeff_row

try:
    from powersum._kernels import cykernels
except ImportError:
    cykernels = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def make_workloads(kernels, kmax, nmax, srows, crows):
    def naive_grid():
        for k in range(kmax + 1):
            for n in range(nmax + 1):
                kernels.power_sum_naive(k, n)

    def triangle():
        kernels.stirling_rows(6 * kmax)

    def samsonadze_grid():
        for k in range(kmax + 1):
            coeffs = crows[k]
            for n in range(nmax + 1):
                kernels.eval_samsonadze(k, n, coeffs)

    def binomial_grid():
        for k in range(kmax + 1):
            for n in range(nmax + 1):
                kernels.eval_binomial(k, n)

    def stirling_grid():
        for k in range(kmax + 1):
            srow = srows[k]
            for n in range(nmax + 1):
                kernels.eval_stirling(k, n, srow)

    def companion_grid():
        for k in range(1, kmax + 1):
            srow = srows[k]
            for n in range(nmax + 1):
                kernels.eval_companion(k, n, srow)

    def factorized_grid():
        for k in range(1, kmax + 1):
            srow = srows[k]
            for n in range(nmax + 1):
                kernels.eval_factorized(k, n, srow)

    return [
        ("naive oracle grid", naive_grid),
        (f"stirling_rows({6 * kmax})", triangle),
        ("samsonadze grid", samsonadze_grid),
        ("binomial grid", binomial_grid),
        ("stirling grid", stirling_grid),
        ("companion grid", companion_grid),
        ("factorized grid", factorized_grid),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=15)
    parser.add_argument("--nmax", type=int, default=150)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    srows = pykernels.stirling_rows(args.kmax)
    crows = [coeff_row(k).coefficients for k in range(args.kmax + 1)]

    print(f"grid: k <= {args.kmax}, n <= {args.nmax}; best of {args.repeats}")
    if cykernels is None:
        print("compiled backend not built; timing the pure backend only\n")
    header = f"{'workload':<24} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    py_loads = make_workloads(pykernels, args.kmax, args.nmax, srows, crows)
    cy_loads = (
        make_workloads(cykernels, args.kmax, args.nmax, srows, crows)
        if cykernels is not None
        else [(name, None) for name, _ in py_loads]
    )

    for (name, py_fn), (_, cy_fn) in zip(py_loads, cy_loads):
        py_t = best_of(py_fn, args.repeats)
        if cy_fn is None:
            print(f"{name:<24} {py_t * 1000:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        cy_t = best_of(cy_fn, args.repeats)
        print(
            f"{name:<24} {py_t * 1000:>8.1f}ms {cy_t * 1000:>8.1f}ms "
            f"{py_t / cy_t:>7.2f}x"
        )


if __name__ == "__main__":
    main()
