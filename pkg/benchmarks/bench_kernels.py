"""Time the numba kernels against the numpy / interpreted fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both variants are built in-process from the same source functions, so the
``DEGSEQ_NUMBA`` setting does not matter here. Compilation happens in a
warm-up call and is reported separately.
"""
from __future__ import annotations

import argparse
import time
from itertools import combinations, product

import numpy as np

from hypdeg import certificates as cert
from hypdeg import kernels
from hypdeg.core import enumerate_balanced_edges, enumerate_edges, incidence_matrix
from hypdeg.search import sign_functionals, support_values


def dfs_case():
    k0 = cert.zero_weight_edges(enumerate_balanced_edges(cert.EX2_SHAPE), cert.EX2_W)
    edges = np.array(k0, dtype=np.int64) - 1
    return edges, np.array(cert.EX2_P, dtype=np.int64), np.int64(0)


def meet_case():
    k0 = cert.zero_weight_edges(enumerate_edges(16, 3), cert.EX1_W)
    inc = incidence_matrix(k0, 16)
    subsets = []
    for size in range(1, 5):
        for T in combinations(range(16), size):
            row = np.zeros(16, dtype=np.int64)
            row[list(T)] = 1
            subsets.append(row)
    return inc, np.array(subsets), np.int64(3)


def violation_case():
    n = 6
    funcs = sign_functionals(n)
    support = support_values(funcs, incidence_matrix(enumerate_edges(n, 3), n))
    pts = np.array([p for p in product(range(8), repeat=n) if sum(p) % 3 == 0], dtype=np.int64)
    return pts, funcs, support


def timeit(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed")
    import numba

    cases = [
        ("dfs_realize (example2 K0, 60 edges)", dfs_case(), kernels._dfs_realize, kernels._dfs_realize),
        ("meet_counts (example1 K0, |T| <= 4)", meet_case(), kernels._meet_counts_numpy,
         kernels._meet_counts_loop),
        ("support_violation (n=6, 729 funcs)", violation_case(), kernels._support_violation_numpy,
         kernels._support_violation_loop),
    ]
    print(f"{'kernel':40s} {'fallback':>10s} {'numba':>10s} {'compile':>9s} {'speedup':>8s}")
    for name, data, fallback, source in cases:
        jitted = numba.njit(nogil=True)(source)
        t0 = time.perf_counter()
        ref = jitted(*data)
        compile_s = time.perf_counter() - t0
        got = fallback(*data)
        pairs = zip(ref, got) if isinstance(ref, tuple) else [(ref, got)]
        same = all(np.array_equal(np.asarray(a), np.asarray(b)) for a, b in pairs)
        if not same:
            raise SystemExit(f"{name}: backends disagree")
        slow = timeit(fallback, data, max(1, args.repeat // 2))
        fast = timeit(jitted, data, args.repeat)
        print(f"{name:40s} {slow:9.4f}s {fast:9.4f}s {compile_s:8.2f}s {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
