"""Monte-Carlo estimation of homomorphism densities.

A morphism from a k-node pattern into an n-node graph is an array of k
node indices drawn uniformly at random; the density estimate is the mean
of one indicator (or weight product) per sampled morphism. The number of
trials needed for an additive-epsilon estimate at confidence 1 - delta is
``ceil(ln(2/delta) / (2 * epsilon**2))``.

Determinism contract: trials are split into fixed chunks of 4096; chunk
``c`` of stream ``i`` draws from the Philox stream keyed by
``(derive_seed(seed, DOMAIN_STREAM, i), c)`` (see ``seeding``). Chunk
partial sums are reduced in chunk order, so the estimate is a pure
function of (seed, stream index) regardless of worker count. Node draws
use the generator's bounded-integer method, which is unbiased for every
n (no modulo reduction).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Optional

import numpy as np

from . import backend
from .graphs import Graph, Pattern, PatternFamily
from .oracles import EdgeOracle
from .seeding import DOMAIN_STREAM, derive_seed, philox

CHUNK_SIZE = 4096

WEIGHTINGS = ("unweighted", "node_attrs", "degree")


@dataclass(frozen=True)
class SamplingConfig:
    """Precision/confidence/seed bundle for one estimation run."""

    epsilon: float = 0.01
    delta: float = 0.05
    seed: int = 0
    weighting: str = "unweighted"
    explicit_n_samples: Optional[int] = None

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if not 0.0 < self.delta < 1.0:
            raise ValueError("delta must lie strictly in (0, 1)")
        if self.weighting not in WEIGHTINGS:
            raise ValueError(f"weighting must be one of {WEIGHTINGS}")
        if self.explicit_n_samples is not None and self.explicit_n_samples < 1:
            raise ValueError("explicit_n_samples must be positive")

    def with_seed(self, seed: int) -> "SamplingConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class DensityEstimate:
    """Result of one sampling run.

    In unweighted mode ``t_bar == hits / n_samples`` exactly; in weighted
    modes ``hits`` counts trials with a positive contribution.
    ``n_overridden`` flags estimates whose sample count did not come from
    the epsilon/delta bound and therefore carry no guarantee.
    """

    t_bar: float
    n_samples: int
    hits: int
    config: SamplingConfig
    elapsed: float
    n_overridden: bool = False


def required_samples(epsilon: float, delta: float) -> int:
    """Trials sufficient for |estimate - truth| <= epsilon w.p. >= 1 - delta."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    if not 0.0 < delta < 1.0:
        raise ValueError("delta must lie strictly in (0, 1)")
    return int(np.ceil(np.log(2.0 / delta) / (2.0 * epsilon * epsilon)))


def _chunk_morphisms(n: int, k: int, size: int, sub_seed: int,
                     chunk_index: int) -> np.ndarray:
    rng = philox(sub_seed, chunk_index)
    return rng.integers(0, n, size=(size, k), dtype=np.int64)


def sample_morphisms(n: int, k: int, count: int, seed: int,
                     stream_index: int = 0) -> Iterator[np.ndarray]:
    """Yield the morphism sample as (chunk, k) arrays of node indices.

    The concatenated stream is exactly what sample_density consumes for
    the same (seed, stream_index).
    """
    if n < 1:
        raise ValueError("target graph needs at least one node")
    if k < 1:
        raise ValueError("pattern needs at least one node")
    sub_seed = derive_seed(seed, DOMAIN_STREAM, stream_index)
    for chunk_index, start in enumerate(range(0, count, CHUNK_SIZE)):
        size = min(CHUNK_SIZE, count - start)
        yield _chunk_morphisms(n, k, size, sub_seed, chunk_index)


def is_homomorphism(f, pattern: Pattern, oracle: EdgeOracle) -> bool:
    """True iff every pattern edge maps to an edge under the oracle.

    Stops at the first failing edge query; the outcome does not depend
    on the order of the pattern's edge list.
    """
    assert len(f) == pattern.k
    for u, v in pattern.edges:
        if not oracle.contains(int(f[u]), int(f[v])):
            return False
    return True


def _weight_vector(g: Graph, weighting: str) -> Optional[np.ndarray]:
    if weighting == "unweighted":
        return None
    if weighting == "node_attrs":
        if g.node_attrs is None:
            raise ValueError("node_attrs weighting requires graph attributes")
        return g.node_attrs
    if g.n == 1:
        return np.zeros(1, dtype=np.float64)  # deg/(n-1) convention at n=1
    return g.degrees() / float(g.n - 1)


def _indicators(kern, morphs, pu, pv, oracle):
    if oracle.kind == "bloom":
        return kern.hom_indicator_bloom(morphs, pu, pv, oracle.words,
                                        oracle.m_bits, oracle.num_hashes,
                                        oracle.hash_seed)
    return kern.hom_indicator_exact(morphs, pu, pv, oracle.indptr,
                                    oracle.indices)


def sample_density(g: Graph, pattern: Pattern, oracle: EdgeOracle,
                   config: SamplingConfig, *, stream_index: int = 0,
                   threads: int = 1) -> DensityEstimate:
    """Estimate the homomorphism density of `pattern` in `g`.

    The estimate lies in [0, 1]; with the exact oracle it is within
    config.epsilon of the true (weighted) density with probability at
    least 1 - config.delta.
    """
    if g.n < 1:
        raise ValueError("cannot sample densities on an empty graph")
    start_time = time.perf_counter()
    n_samples = config.explicit_n_samples
    overridden = n_samples is not None
    if n_samples is None:
        n_samples = required_samples(config.epsilon, config.delta)
    weights = _weight_vector(g, config.weighting)
    kern = backend.kernels()
    pu = np.ascontiguousarray(pattern.edges[:, 0], dtype=np.int64)
    pv = np.ascontiguousarray(pattern.edges[:, 1], dtype=np.int64)
    sub_seed = derive_seed(config.seed, DOMAIN_STREAM, stream_index)
    sizes = [min(CHUNK_SIZE, n_samples - s)
             for s in range(0, n_samples, CHUNK_SIZE)]

    def run_chunk(chunk_index: int):
        morphs = _chunk_morphisms(g.n, pattern.k, sizes[chunk_index],
                                  sub_seed, chunk_index)
        ind = _indicators(kern, morphs, pu, pv, oracle)
        if weights is None:
            hits = int(ind.sum())
            return hits, float(hits)
        rows = np.nonzero(ind)[0]
        if rows.size == 0:
            return 0, 0.0
        products = np.prod(weights[morphs[rows]], axis=1)
        return int((products > 0.0).sum()), float(products.sum())

    hits = 0
    total = 0.0
    if threads > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk_hits, chunk_sum in pool.map(run_chunk, range(len(sizes))):
                hits += chunk_hits
                total += chunk_sum
    else:
        for chunk_index in range(len(sizes)):
            chunk_hits, chunk_sum = run_chunk(chunk_index)
            hits += chunk_hits
            total += chunk_sum
    t_bar = min(1.0, total / n_samples)
    return DensityEstimate(t_bar=t_bar, n_samples=n_samples, hits=hits,
                           config=config,
                           elapsed=time.perf_counter() - start_time,
                           n_overridden=overridden)


def sample_density_many(g: Graph, patterns: PatternFamily, oracle: EdgeOracle,
                        config: SamplingConfig, *,
                        threads: int = 1) -> list[DensityEstimate]:
    """One estimate per pattern, sharing the oracle.

    Pattern i uses stream index i, so results match standalone
    sample_density calls with stream_index=i and are independent across
    patterns.
    """
    return [sample_density(g, pat, oracle, config, stream_index=i,
                           threads=threads)
            for i, pat in enumerate(patterns)]
