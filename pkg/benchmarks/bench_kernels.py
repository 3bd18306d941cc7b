#!/usr/bin/env python3
"""Benchmark the pure-Python and compiled polynomial kernels.

Two workloads: raw sparse polynomial products of growing size, and the
end-to-end trace pipeline on random curves over the closed genus-two
surface (matrix products dominate there).  Run from the repository root:

    python benchmarks/bench_kernels.py [--count 150] [--max-q 6] [--repeat 3]
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from plumbtrace import gausspoly
from plumbtrace.fuzz import FuzzConfig, random_coords
from plumbtrace.holonomy import trace_of_curve
from plumbtrace.surface import genus_two


def bench_poly_products(kernel: str, sizes, repeat: int) -> dict:
    gausspoly.set_kernel(kernel)
    rng = random.Random(7)
    out = {}
    for nterms in sizes:
        polys = [
            gausspoly.GaussPoly.from_terms(
                3,
                {
                    tuple(rng.randint(0, 6) for _ in range(3)): (
                        rng.randint(-99, 99),
                        rng.randint(-99, 99),
                    )
                    for _ in range(nterms)
                },
            )
            for _ in range(20)
        ]
        best = min(
            _time(lambda: [a * b for a in polys for b in polys])
            for _ in range(repeat)
        )
        out[nterms] = best
    return out


def bench_trace_pipeline(kernel: str, count: int, max_q: int, repeat: int) -> float:
    gausspoly.set_kernel(kernel)
    surface = genus_two()
    coords = list(
        random_coords(FuzzConfig(surface, seed=13, max_q=max_q, count=count))
    )

    def run():
        for c in coords:
            trace_of_curve(surface, c)

    return min(_time(run) for _ in range(repeat))


def _time(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=150)
    parser.add_argument("--max-q", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = gausspoly.available_kernels()
    print(f"kernels available: {', '.join(kernels)}")
    if "compiled" not in kernels:
        print("compiled kernel not built; benchmarking the pure kernel only")

    sizes = (8, 32, 128)
    poly_results = {k: bench_poly_products(k, sizes, args.repeat) for k in kernels}
    print("\nraw products of 20x20 random 3-variable polynomials (seconds):")
    header = "terms".ljust(8) + "".join(k.ljust(12) for k in kernels)
    print(header)
    for n in sizes:
        row = str(n).ljust(8) + "".join(
            f"{poly_results[k][n]:.4f}".ljust(12) for k in kernels
        )
        print(row)

    pipeline = {
        k: bench_trace_pipeline(k, args.count, args.max_q, args.repeat)
        for k in kernels
    }
    print(f"\ntrace pipeline, {args.count} random curves on the closed "
          f"genus-two surface (seconds):")
    for k in kernels:
        print(f"  {k:<10} {pipeline[k]:.4f}")
    if len(kernels) == 2:
        speedup = pipeline["pure"] / pipeline["compiled"]
        print(f"  speedup    {speedup:.2f}x")

    gausspoly.set_kernel("compiled" if "compiled" in kernels else "pure")


if __name__ == "__main__":
    main()
