"""Ground-truth homomorphism counting on small instances.

Brute force over all n**k maps, plus closed-form cross-checks for the
2-clique and 3-clique and a permutation-search isomorphism test. These
exist to validate the sampler; none of it scales past desk-size inputs,
which is enforced by explicit budgets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import backend
from .graphs import Graph, Pattern, PatternFamily

# n**k cap: (n=30, k=5) fits with room to spare.
MAX_ENUMERATION = 100_000_000

MAX_ISOMORPHISM_NODES = 8


@dataclass(frozen=True)
class ExactCount:
    hom_count: int
    density: float


def _adjacency_bits(g: Graph) -> np.ndarray:
    words = np.zeros((g.n, (g.n + 63) // 64), dtype=np.uint64)
    if g.m:
        rows = np.concatenate((g.edges[:, 0], g.edges[:, 1]))
        cols = np.concatenate((g.edges[:, 1], g.edges[:, 0]))
        np.bitwise_or.at(words, (rows, cols >> 6),
                         np.uint64(1) << (cols & 63).astype(np.uint64))
    return words


def exact_hom(pattern: Pattern, g: Graph) -> ExactCount:
    """Count homomorphisms by enumerating every map [k] -> [n]."""
    if g.n == 0:
        raise ValueError("homomorphism density is undefined for an empty graph")
    total = g.n ** pattern.k
    if total > MAX_ENUMERATION:
        raise ValueError(f"n**k = {total} exceeds the enumeration budget "
                         f"of {MAX_ENUMERATION}")
    if pattern.l == 0:
        count = total  # every map preserves an empty edge set
    else:
        adj = _adjacency_bits(g)
        count = int(backend.kernels().count_homs(g.n, pattern.k, adj,
                                                 pattern.edges[:, 0],
                                                 pattern.edges[:, 1]))
    return ExactCount(hom_count=count, density=count / total)


def hom_k2(g: Graph) -> int:
    """Closed form: every edge yields two ordered homomorphic pairs."""
    return 2 * g.m


def hom_k3(g: Graph) -> int:
    """Closed form: ordered adjacent pairs weighted by common neighbors."""
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[int(u)].add(int(v))
        nbrs[int(v)].add(int(u))
    total = 0
    for u in range(g.n):
        for v in nbrs[u]:
            total += len(nbrs[u] & nbrs[v])
    return total


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation search; limited to graphs with at most 8 nodes."""
    if g1.n > MAX_ISOMORPHISM_NODES or g2.n > MAX_ISOMORPHISM_NODES:
        raise ValueError(f"isomorphism search limited to "
                         f"{MAX_ISOMORPHISM_NODES} nodes")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees().tolist()) != sorted(g2.degrees().tolist()):
        return False
    target = g2.edge_set()
    edges1 = [(int(u), int(v)) for u, v in g1.edges]
    for perm in itertools.permutations(range(g1.n)):
        for u, v in edges1:
            a, b = perm[u], perm[v]
            if (a, b) not in target and (b, a) not in target:
                break
        else:
            return True
    return False


def density_vector_exact(g: Graph, patterns: PatternFamily) -> np.ndarray:
    """Exact density per pattern, in family order."""
    return np.array([exact_hom(p, g).density for p in patterns],
                    dtype=np.float64)
