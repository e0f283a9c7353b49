"""Compare the pure-Python and compiled kernel backends.

Times the raw 3-vector kernels on realistic operand sizes, then a full
construct-and-verify pipeline, for each available backend.

    python benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from quadconc import _backend, build_from_ratios, verify_all
from quadconc.generators import GenSpec, gen_quadrilateral, gen_ratios

# operand magnitudes match what deep construction levels produce
SMALL = ((587, -2203, 1009), (-311, 709, -4001), (73, -5, 881))
BIG = (
    (123456789012345678901234567890, -98765432109876543210987654321, 11111111111111111111),
    (22222222222222222222, 3333333333333333333333333333, -444444444444444444444),
    (-987654321987654321, 123123123123123123123, 55555555555),
)


def _time(fn, n: int) -> float:
    start = time.perf_counter()
    for _ in range(n):
        fn()
    return (time.perf_counter() - start) / n * 1e9


def bench_kernels(mod, repeat: int) -> dict[str, float]:
    u, v, w = BIG
    s1, s2, s3 = SMALL
    return {
        "cross3/small": _time(lambda: mod.cross3(s1, s2), repeat),
        "cross3/big": _time(lambda: mod.cross3(u, v), repeat),
        "det3/small": _time(lambda: mod.det3(s1, s2, s3), repeat),
        "det3/big": _time(lambda: mod.det3(u, v, w), repeat),
        "reduce3/big": _time(lambda: mod.reduce3(*u), repeat),
        "dot3/big": _time(lambda: mod.dot3(u, v), repeat),
    }


def bench_pipeline(instances: int) -> float:
    spec = GenSpec(seed=5)
    prepared = [(gen_quadrilateral(spec, i), gen_ratios(spec, i)) for i in range(instances)]
    start = time.perf_counter()
    for quad, ratios in prepared:
        verify_all(build_from_ratios(quad, ratios))
    return (time.perf_counter() - start) / instances * 1e3


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=100_000,
                        help="iterations per kernel microbenchmark")
    parser.add_argument("--instances", type=int, default=300,
                        help="instances for the end-to-end pipeline timing")
    args = parser.parse_args()

    backends = _backend.available()
    print(f"available backends: {', '.join(backends)}")
    results: dict[str, dict[str, float]] = {}
    pipeline: dict[str, float] = {}
    previous = _backend.active
    try:
        for name in backends:
            _backend.use(name)
            from quadconc import _purekernel

            mod = _purekernel if name == "pure" else __import__(
                "quadconc._fastkernel", fromlist=["_fastkernel"]
            )
            results[name] = bench_kernels(mod, args.repeat)
            pipeline[name] = bench_pipeline(args.instances)
    finally:
        _backend.use(previous)

    ops = list(next(iter(results.values())))
    both = len(backends) == 2
    header = f"{'operation':>14s}" + "".join(f"{b:>12s}" for b in backends)
    if both:
        header += f"{'compiled is':>12s}"
    print(header)
    for op in ops:
        row = f"{op:>14s}" + "".join(f"{results[b][op]:>10.0f}ns" for b in backends)
        if both:
            row += f"{results['pure'][op] / results['compiled'][op]:>10.2f}x"
        print(row)
    row = f"{'pipeline':>14s}" + "".join(f"{pipeline[b]:>10.3f}ms" for b in backends)
    if both:
        row += f"{pipeline['pure'] / pipeline['compiled']:>10.2f}x"
    print(row)
    print("pipeline = one build_from_ratios + verify_all per instance")


if __name__ == "__main__":
    main()
