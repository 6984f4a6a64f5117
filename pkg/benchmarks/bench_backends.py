#!/usr/bin/env python3
"""Benchmark the compiled kernel lane against the pure-Python fallback.

Usage:
    python benchmarks/bench_backends.py [--size {small,medium}] [--repeat N]

Runs each hot kernel on both lanes with identical inputs, checks the results
agree, and prints per-kernel timings with the speedup factor.
"""

from __future__ import annotations

import argparse
import time

from arithbilliards import kernels_py

try:
    from arithbilliards import kernels_cy
except ImportError:
    kernels_cy = None

CASES = {
    "small": [
        ("trace_paths", "trace_paths", [60, 44]),
        ("least_closure", "least_closure_violations", [6, 5, 4]),
        ("reach_scan", "reach_scan", [4, 4, 4]),
        ("coordinate_sums", "coordinate_sum_violations", [6, 5, 4]),
        ("bfs_components", "bfs_components", [99, 99]),
    ],
    "medium": [
        ("trace_paths", "trace_paths", [720, 504]),
        ("least_closure", "least_closure_violations", [8, 7, 5]),
        ("reach_scan", "reach_scan", [6, 6, 6]),
        ("coordinate_sums", "coordinate_sum_violations", [8, 7, 5]),
        ("bfs_components", "bfs_components", [999, 999]),
    ],
}


def time_call(fn, arg, repeat: int) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        started = time.perf_counter()
        result = fn(list(arg))
        best = min(best, time.perf_counter() - started)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", choices=sorted(CASES), default="small")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if kernels_cy is None:
        print("compiled lane not built (pip install -e . --no-build-isolation); "
              "timing the pure lane only")
    header = f"{'kernel':<18} {'input':<16} {'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, fn_name, arg in CASES[args.size]:
        py_time, py_result = time_call(getattr(kernels_py, fn_name), arg, args.repeat)
        if kernels_cy is None:
            print(f"{label:<18} {str(arg):<16} {py_time * 1e3:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        cy_time, cy_result = time_call(getattr(kernels_cy, fn_name), arg, args.repeat)
        assert py_result == cy_result, f"lane mismatch in {fn_name}({arg})"
        print(
            f"{label:<18} {str(arg):<16} {py_time * 1e3:>8.1f}ms "
            f"{cy_time * 1e3:>8.1f}ms {py_time / cy_time:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
