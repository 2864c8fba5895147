"""Scalability benchmark: density sampling on G(n, log^2(n)/n) graphs.

Timings separate the oracle build from the sampling phase and report the
median of repeated runs after a warm-up. Estimates (not timings) are
reproducible bit for bit from the seed.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass
from statistics import median

from .graphs import Graph, Pattern, generate_er
from .oracles import build_oracle
from .sampling import SamplingConfig, sample_density
from .seeding import DOMAIN_BENCH, derive_seed

BENCH_CSV_HEADER = "n,pattern,oracle,epsilon,N,build_ms,sample_ms,t_bar"


@dataclass(frozen=True)
class BenchResult:
    n: int
    pattern: str
    oracle: str
    epsilon: float
    n_samples: int
    build_ms: float
    sample_ms: float
    t_bar: float


def er_probability(n: int) -> float:
    """Edge probability log^2(n)/n (natural log): sparse but connected."""
    return math.log(n) ** 2 / n


def _timed(fn, repeats: int):
    fn()  # warm-up
    times = []
    result = None
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        result = fn()
        times.append((time.perf_counter() - t0) * 1000.0)
    return result, median(times)


def _bench_one(g: Graph, n: int, pattern: Pattern, kind: str, epsilon: float,
               seed_n: int, delta: float, fpr: float, repeats: int,
               threads: int) -> BenchResult:
    oracle, build_ms = _timed(lambda: build_oracle(g, kind, fpr), repeats)
    config = SamplingConfig(epsilon=epsilon, delta=delta, seed=seed_n)
    est, sample_ms = _timed(
        lambda: sample_density(g, pattern, oracle, config, threads=threads),
        repeats)
    return BenchResult(n=n, pattern=pattern.name, oracle=kind, epsilon=epsilon,
                       n_samples=est.n_samples, build_ms=build_ms,
                       sample_ms=sample_ms, t_bar=est.t_bar)


def run_bench(sizes, pattern: Pattern, variants, seed: int, *,
              delta: float = 0.05, fpr: float = 0.01, repeats: int = 5,
              threads: int = 1, error_stream=None) -> list[BenchResult]:
    """One row per (n, oracle kind, epsilon) on G(n, log^2(n)/n).

    All variants at one n share the generated graph and the morphism
    stream (same sub-seed), so oracle kinds are directly comparable.
    A row that runs out of memory is reported and skipped.
    """
    if error_stream is None:
        error_stream = sys.stderr
    results = []
    for n in sizes:
        if n < 10:
            raise ValueError("benchmark sizes start at 10 nodes")
        seed_n = derive_seed(seed, DOMAIN_BENCH, n)
        try:
            g = generate_er(n, er_probability(n), seed_n)
        except MemoryError:
            print(f"bench: generation failed for n={n}: out of memory",
                  file=error_stream)
            continue
        for kind, epsilon in variants:
            try:
                results.append(_bench_one(g, n, pattern, kind, epsilon,
                                          seed_n, delta, fpr, repeats,
                                          threads))
            except MemoryError:
                print(f"bench: row failed for n={n} oracle={kind} "
                      f"epsilon={epsilon}: out of memory", file=error_stream)
    return results


def bench_patterns(n: int, patterns, variants, seed: int, *,
                   delta: float = 0.05, fpr: float = 0.01, repeats: int = 5,
                   threads: int = 1, error_stream=None) -> list[BenchResult]:
    """Timing rows for several patterns at one fixed n."""
    if error_stream is None:
        error_stream = sys.stderr
    if n < 10:
        raise ValueError("benchmark sizes start at 10 nodes")
    seed_n = derive_seed(seed, DOMAIN_BENCH, n)
    g = generate_er(n, er_probability(n), seed_n)
    results = []
    for pattern in patterns:
        for kind, epsilon in variants:
            try:
                results.append(_bench_one(g, n, pattern, kind, epsilon,
                                          seed_n, delta, fpr, repeats,
                                          threads))
            except MemoryError:
                print(f"bench: row failed for pattern={pattern.name} "
                      f"oracle={kind}: out of memory", file=error_stream)
    return results


def write_bench_csv(results: list[BenchResult]) -> str:
    lines = [BENCH_CSV_HEADER]
    for r in results:
        lines.append(f"{r.n},{r.pattern},{r.oracle},{r.epsilon:g},"
                     f"{r.n_samples},{r.build_ms:.3f},{r.sample_ms:.3f},"
                     f"{r.t_bar!r}")
    return "\n".join(lines) + "\n"
