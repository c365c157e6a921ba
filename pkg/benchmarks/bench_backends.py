#!/usr/bin/env python3
"""Compare the numba and numpy simplex kernels on realizability workloads.

Two workloads dominate real use: deciding linear separability for every
function of n variables (a census of 2^(2^n) small LPs) and computing the
minimal order of random functions (several LPs of growing size each).
Both kernels must return identical answers; this script checks that while
timing them.

Usage:
    python benchmarks/bench_backends.py [--census-n 4] [--orders 200] [--seed 7]
"""

from __future__ import annotations

import argparse
import random
import time

from ptfkit import TruthTable, is_threshold, order
from ptfkit import _simplex


def census(n: int) -> int:
    count = 0
    for code in range(1 << (1 << n)):
        bits = tuple((code >> i) & 1 for i in range(1 << n))
        if is_threshold(TruthTable(n, bits)) is not None:
            count += 1
    return count


def random_orders(n: int, how_many: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    out = []
    for _ in range(how_many):
        bits = tuple(rng.randint(0, 1) for _ in range(1 << n))
        out.append(order(TruthTable(n, bits)))
    return out


def timed(fn, *args):
    t0 = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - t0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--census-n", type=int, default=4, choices=(2, 3, 4))
    parser.add_argument("--orders", type=int, default=200, help="random order computations (n=4)")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    backends = ["numpy"]
    if _simplex._HAS_NUMBA:
        backends.insert(0, "numba")
    else:
        print("numba not importable; timing the numpy kernel only")

    # trigger JIT compilation outside the timed region
    _simplex.set_backend(backends[0])
    is_threshold(TruthTable(2, (0, 1, 1, 0)))

    results: dict[str, dict[str, float]] = {}
    answers: dict[str, tuple] = {}
    for backend in backends:
        _simplex.set_backend(backend)
        census_count, census_time = timed(census, args.census_n)
        orders, orders_time = timed(random_orders, 4, args.orders, args.seed)
        results[backend] = {"census": census_time, "orders": orders_time}
        answers[backend] = (census_count, tuple(orders))
        print(
            f"{backend:>6}: census n={args.census_n} -> {census_count} threshold "
            f"in {census_time:.2f}s | {args.orders} random n=4 orders in {orders_time:.2f}s"
        )

    if len(backends) == 2:
        assert answers["numba"] == answers["numpy"], "kernels disagree"
        for workload in ("census", "orders"):
            ratio = results["numpy"][workload] / results["numba"][workload]
            print(f"numba speedup on {workload}: {ratio:.1f}x")
        print("both kernels returned identical answers")


if __name__ == "__main__":
    main()
