#!/usr/bin/env python3
"""Benchmark the numba and numpy minimum-weight scan backends side by side.

Workloads: the (14, 4^10) Lee scan over Z4+uZ4 of length 7, plus synthetic
free codes whose span size is controlled by --extra-bits.  The numba timing
excludes the one-off JIT compile (reported separately).
"""

import argparse
import time

import numpy as np

from zqu import kernels
from zqu.codes import CyclicCode
from zqu.metrics import weight_table
from zqu.poly import parse_r_poly
from zqu.ring import make_ring


def workload_gray_z4():
    r4 = make_ring(2, 2)
    gens = [parse_r_poly("3*x^3+x^2+2*x+1", r4), parse_r_poly("u*(x+3)", r4)]
    code = CyclicCode(7, r4, gens, "module")
    return "z4 length-7 module span, lee (2^20 words)", code, "lee"


def workload_hamming_z8(extra_bits):
    r8 = make_ring(2, 3)
    g = parse_r_poly("x^10+6*x^9+x^8+6*x^7+3*x^5+7*x^4+4*x^3+7*x^2+5*x+1", r8)
    code = CyclicCode(15, r8, [g])
    return f"z8 length-15 free code, hamming (first 2^{extra_bits} words)", code, "hamming"


def time_scan(code, metric, backend, stop):
    span = code.span()
    basis, ranges = span.enumeration_basis()
    rows = np.array(basis, dtype=np.int64)
    ranges_arr = np.array(ranges, dtype=np.int64)
    table = weight_table(metric, code.params)
    start = time.perf_counter()
    best, idx, scanned = kernels.min_weight_scan(
        rows, ranges_arr, table, code.params.q, code.n, 1, stop, backend=backend
    )
    return time.perf_counter() - start, best, scanned


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--extra-bits", type=int, default=22,
                        help="scan 2^BITS words of the length-15 free code (default 22)")
    args = parser.parse_args()

    # trigger and time the one-off numba compile on a tiny scan
    warm = workload_gray_z4()[1]
    t0 = time.perf_counter()
    time_scan(warm, "lee", "numba", 16)
    print(f"numba compile + warmup: {time.perf_counter() - t0:.2f}s\n")

    jobs = [workload_gray_z4(), workload_hamming_z8(args.extra_bits)]
    stops = [None, (1 << args.extra_bits) + 1]
    header = f"{'workload':<55} {'backend':<8} {'seconds':>9} {'Mwords/s':>9}"
    print(header)
    print("-" * len(header))
    for (name, code, metric), stop in zip(jobs, stops):
        stop = code.span().size() if stop is None else stop
        for backend in ("numba", "numpy"):
            secs, best, scanned = time_scan(code, metric, backend, stop)
            rate = scanned / secs / 1e6
            print(f"{name:<55} {backend:<8} {secs:>8.3f}s {rate:>9.1f}  (min={best})")


if __name__ == "__main__":
    main()
