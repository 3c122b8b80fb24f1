#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths on every available backend:

* subset enumeration: zero-count transform over all 2^n row subsets
* pixel encoding: sampling one basis-matrix column per pixel

Usage: python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pvss import BinaryImage, SchemeParams, codebook_for, encode, expand
from pvss.backend import AVAILABLE


def timed(fn, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_subsets(n: int, k: int) -> dict[str, float]:
    pair = expand(codebook_for(SchemeParams(k=k, n=n)), n)
    masks = pair.column_masks(0)
    uniq, counts = np.unique(masks, return_counts=True)
    return {
        name: timed(lambda kern=kern: kern.zero_counts_all_subsets(uniq, counts, n))
        for name, kern in sorted(AVAILABLE.items())
    }


def bench_encode(pixels: int, k: int, n: int) -> dict[str, float]:
    side = int(pixels**0.5)
    secret = BinaryImage(np.zeros((side, side), dtype=np.uint8))
    spec = codebook_for(SchemeParams(k=k, n=n))
    return {
        name: timed(lambda b=name: encode(secret, spec, seed=1, backend=b), repeats=2)
        for name in sorted(AVAILABLE)
    }


def emit(label: str, results: dict[str, float]) -> None:
    base = results.get("python")
    parts = []
    for name, secs in results.items():
        speedup = f" ({base / secs:5.1f}x)" if base and name != "python" else ""
        parts.append(f"{name} {secs * 1e3:9.2f} ms{speedup}")
    print(f"{label:34s} " + "   ".join(parts))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    print(f"backends: {sorted(AVAILABLE)}")
    subset_cases = [(10, 10), (16, 5)] if args.quick else [(10, 10), (16, 5), (20, 4)]
    for n, k in subset_cases:
        emit(f"subsets n={n} (k={k}, all 2^{n})", bench_subsets(n, k))

    encode_cases = [(100_000, 3, 5)] if args.quick else [(1_000_000, 3, 5), (1_000_000, 8, 16)]
    for pixels, k, n in encode_cases:
        emit(f"encode {pixels:>9,} px ({k},{n})", bench_encode(pixels, k, n))


if __name__ == "__main__":
    main()
