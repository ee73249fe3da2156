"""Benchmark: pure-Python vs compiled word kernel.

Workloads: ShortLex closure of random reduced words, and full ball
construction with the exact rewriting engine.  Run as a script:

    python benchmarks/bench_wordcore.py
"""
from __future__ import annotations

import random
import time

from coxkit._speedups import WordKernel as CompiledKernel
from coxkit.ball import _TitsEngine
from coxkit.matrices import named_matrix
from coxkit.wordcore.pure import WordKernel as PureKernel


def _random_words(matrix, count, length, seed=20260823):
    rng = random.Random(seed)
    return [bytes(rng.randrange(matrix.rank) for _ in range(length))
            for _ in range(count)]


def bench_shortlex(matrix, words):
    out = {}
    for label, cls in (("pure", PureKernel), ("compiled", CompiledKernel)):
        kernel = cls(matrix.entries)
        start = time.perf_counter()
        results = [kernel.shortlex(w) for w in words]
        out[label] = (time.perf_counter() - start, results)
    assert out["pure"][1] == out["compiled"][1], "kernel outputs disagree"
    return {k: v[0] for k, v in out.items()}


def bench_ball(matrix, radius):
    out = {}
    for label, cls in (("pure", PureKernel), ("compiled", CompiledKernel)):
        engine = _TitsEngine.__new__(_TitsEngine)
        engine.kernel = cls(matrix.entries, 100_000)
        start = time.perf_counter()
        ball = engine.build(matrix, radius, cap=2_000_000)
        out[label] = (time.perf_counter() - start, len(ball))
    assert out["pure"][1] == out["compiled"][1]
    return {k: v[0] for k, v in out.items()}


def main():
    rows = []
    for name, length in (("A3", 14), ("B3", 12), ("H3", 10)):
        matrix = named_matrix(name)
        words = _random_words(matrix, 60, length)
        times = bench_shortlex(matrix, words)
        rows.append((f"shortlex {name} (60 words, len {length})", times))
    for name, radius in (("A3", 6), ("B3", 9), ("H3", 15)):
        times = bench_ball(named_matrix(name), radius)
        rows.append((f"ball {name} radius {radius}", times))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  speedup")
    for label, times in rows:
        speed = times["pure"] / times["compiled"] if times["compiled"] else float("inf")
        print(f"{label:<{width}}  {times['pure']:>8.3f}s  "
              f"{times['compiled']:>8.3f}s  {speed:>6.1f}x")


if __name__ == "__main__":
    main()
