"""Slow but obviously-correct reference computations for tests.

Everything here enumerates naively in pure Python and must stay
independent of the library's kernels: these are the oracles the fast
paths are checked against.
"""

import itertools


def brute_hom_count(pattern_edges, k, n, edge_set):
    """Count maps [k] -> [n] that send every pattern edge to an edge."""
    edges = {(min(u, v), max(u, v)) for u, v in edge_set}
    count = 0
    for f in itertools.product(range(n), repeat=k):
        if all(f[u] != f[v] and (min(f[u], f[v]), max(f[u], f[v])) in edges
               for u, v in pattern_edges):
            count += 1
    return count


def brute_weighted_density(pattern_edges, k, n, edge_set, weights):
    """Mean over all maps of [is homomorphism] * product of node weights."""
    edges = {(min(u, v), max(u, v)) for u, v in edge_set}
    total = 0.0
    for f in itertools.product(range(n), repeat=k):
        if all(f[u] != f[v] and (min(f[u], f[v]), max(f[u], f[v])) in edges
               for u, v in pattern_edges):
            w = 1.0
            for x in f:
                w *= weights[x]
            total += w
    return total / n ** k


def connected_components(n, edge_set):
    seen = set()
    comps = 0
    adj = {u: set() for u in range(n)}
    for u, v in edge_set:
        adj[u].add(v)
        adj[v].add(u)
    for start in range(n):
        if start in seen:
            continue
        comps += 1
        stack = [start]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x] - seen)
    return comps
