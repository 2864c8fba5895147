"""Graph and pattern types, random graph generation, and file formats.

Graphs are undirected and simple. Edges are stored canonically as an
``(m, 2)`` int64 array with ``u < v`` per row, rows sorted
lexicographically; both arrays are frozen after construction so graphs
can be shared read-only across worker threads.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from typing import IO, Iterable, Optional, Sequence, Union

import numpy as np

from .seeding import DOMAIN_ER, derive_seed, philox

# Switch point for the G(n,p) generator: below this we draw one Bernoulli
# per node pair in row-major order; at or above it we jump between edges
# with geometric gaps (same distribution, feasible for huge n).
ER_SKIP_THRESHOLD = 100_000

_ER_CHUNK = 1 << 22

MAX_ATLAS = 31


class FormatError(ValueError):
    """Malformed edge-list or dataset input."""


class Graph:
    """Undirected simple graph on nodes 0..n-1."""

    __slots__ = ("n", "edges", "node_attrs")

    def __init__(self, n: int, edges: np.ndarray, node_attrs=None):
        # Callers go through new_graph(); this constructor trusts its input.
        self.n = int(n)
        self.edges = edges
        self.node_attrs = node_attrs
        edges.setflags(write=False)
        if node_attrs is not None:
            node_attrs.setflags(write=False)

    @property
    def m(self) -> int:
        return self.edges.shape[0]

    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)

    def edge_set(self) -> set:
        return {(int(u), int(v)) for u, v in self.edges}

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Pattern:
    """Small pattern graph; edge order is preserved for short-circuit tests."""

    __slots__ = ("k", "edges", "name")

    def __init__(self, k: int, edges: np.ndarray, name: str):
        self.k = int(k)
        self.edges = edges
        self.name = name
        edges.setflags(write=False)

    @property
    def l(self) -> int:
        return self.edges.shape[0]

    def edge_list(self) -> list:
        return [(int(u), int(v)) for u, v in self.edges]

    def __repr__(self):
        return f"Pattern({self.name!r}, k={self.k}, l={self.l})"


PatternFamily = list  # ordered list of Pattern


def _as_edge_array(edges) -> np.ndarray:
    arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                     dtype=np.int64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("edges must be pairs")
    return arr


def new_graph(n: int, edges, node_attrs=None) -> Graph:
    """Build a validated Graph: canonicalizes edges, rejects bad input."""
    n = int(n)
    if n < 0:
        raise ValueError("node count must be non-negative")
    arr = _as_edge_array(edges)
    if arr.size:
        if (arr[:, 0] == arr[:, 1]).any():
            raise ValueError("self-loop not allowed in a simple graph")
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("edge endpoint out of range")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        order = np.lexsort((hi, lo))
        arr = np.column_stack((lo[order], hi[order]))
        dup = (np.diff(arr[:, 0]) == 0) & (np.diff(arr[:, 1]) == 0)
        if dup.any():
            i = int(np.nonzero(dup)[0][0])
            raise ValueError(f"duplicate edge ({arr[i, 0]}, {arr[i, 1]})")
    attrs = None
    if node_attrs is not None:
        attrs = np.asarray(node_attrs, dtype=np.float64)
        if attrs.shape != (n,):
            raise ValueError(f"node_attrs length {attrs.size} != n {n}")
        if attrs.size and (attrs.min() < 0.0 or attrs.max() > 1.0):
            raise ValueError("node attributes must lie in [0, 1]")
    return Graph(n, arr, attrs)


def _graph_from_canonical(n: int, edges: np.ndarray) -> Graph:
    """Fast path for generators whose output is canonical by construction."""
    return Graph(n, edges)


def new_pattern(k: int, edge_list, name: str = "") -> Pattern:
    """Build a validated Pattern. Input edge order is kept."""
    k = int(k)
    if k < 1:
        raise ValueError("pattern needs at least one node")
    arr = _as_edge_array(edge_list)
    if arr.size:
        if (arr[:, 0] == arr[:, 1]).any():
            raise ValueError("self-loop not allowed in a pattern")
        if arr.min() < 0 or arr.max() >= k:
            raise ValueError("pattern edge endpoint out of range")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        arr = np.column_stack((lo, hi))
        seen = set()
        for u, v in arr:
            if (int(u), int(v)) in seen:
                raise ValueError(f"duplicate pattern edge ({u}, {v})")
            seen.add((int(u), int(v)))
    return Pattern(k, arr, name or f"P(k={k},l={arr.shape[0]})")


def clique(k: int) -> Pattern:
    """Complete pattern K_k."""
    return new_pattern(k, list(itertools.combinations(range(k), 2)), name=f"K{k}")


def pattern_from_graph(g: Graph, name: str = "") -> Pattern:
    return new_pattern(g.n, g.edges, name)


def pattern_to_graph(p: Pattern) -> Graph:
    return new_graph(p.k, p.edges)


# ---------------------------------------------------------------------------
# Erdos-Renyi generation


def generate_er(n: int, p: float, seed: int) -> Graph:
    """G(n, p): every unordered pair becomes an edge with probability p.

    The graph is a pure function of (n, p, seed). For n below
    ER_SKIP_THRESHOLD one uniform draw decides each pair, taken in
    row-major order over the upper triangle; for larger n the generator
    jumps between included pairs with geometric(p) gaps drawn from the
    same seeded stream, which samples the identical distribution without
    touching all n(n-1)/2 pairs.
    """
    n = int(n)
    if n < 0:
        raise ValueError("node count must be non-negative")
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    total_pairs = n * (n - 1) // 2
    if total_pairs == 0 or p == 0.0:
        return _graph_from_canonical(n, np.empty((0, 2), dtype=np.int64))
    rng = philox(derive_seed(seed, DOMAIN_ER))
    if p == 1.0:
        iu, iv = np.triu_indices(n, k=1)
        edges = np.column_stack((iu, iv)).astype(np.int64)
        return _graph_from_canonical(n, edges)
    if n < ER_SKIP_THRESHOLD:
        linear = _er_linear_bernoulli(rng, total_pairs, p)
    else:
        linear = _er_linear_skipping(rng, total_pairs, p)
    return _graph_from_canonical(n, _decode_pairs(n, linear))


def _er_linear_bernoulli(rng, total_pairs: int, p: float) -> np.ndarray:
    parts = []
    for start in range(0, total_pairs, _ER_CHUNK):
        count = min(_ER_CHUNK, total_pairs - start)
        hits = np.nonzero(rng.random(count) < p)[0]
        if hits.size:
            parts.append(hits.astype(np.int64) + start)
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def _er_linear_skipping(rng, total_pairs: int, p: float) -> np.ndarray:
    # Gap between consecutive edges is geometric: floor(log U / log(1-p)).
    log1mp = np.log1p(-p)
    parts = []
    pos = -1
    while pos < total_pairs - 1:
        expected = max(1024, int((total_pairs - pos) * p * 1.2))
        batch = min(_ER_CHUNK, expected)
        u = 1.0 - rng.random(batch)  # (0, 1]
        gaps = np.floor(np.log(u) / log1mp).astype(np.int64)
        idx = np.cumsum(gaps + 1) + pos
        if idx[-1] < total_pairs:
            parts.append(idx)
            pos = int(idx[-1])
        else:
            parts.append(idx[idx < total_pairs])
            break
    if not parts:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(parts)


def _decode_pairs(n: int, linear: np.ndarray) -> np.ndarray:
    """Invert row-major upper-triangle indexing: index -> (u, v)."""
    if linear.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    rows = np.arange(n, dtype=np.int64)
    row_start = rows * n - rows * (rows + 1) // 2  # pairs before row u
    u = np.searchsorted(row_start, linear, side="right") - 1
    v = linear - row_start[u] + u + 1
    return np.column_stack((u, v))


# ---------------------------------------------------------------------------
# Enumeration of small graphs up to isomorphism

def _pairs(k: int):
    return tuple((i, j) for i in range(k) for j in range(i + 1, k))


def _relabel_mask(mask: int, perm, pairs, pair_pos) -> int:
    out = 0
    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            out |= 1 << pair_pos[(a, b)]
    return out


def _is_connected_mask(k: int, mask: int, pairs) -> bool:
    if k == 1:
        return True
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            parent[find(u)] = find(v)
    root = find(0)
    return all(find(x) == root for x in range(k))


def _degree_sequence(k: int, mask: int, pairs) -> tuple:
    deg = [0] * k
    for bit, (u, v) in enumerate(pairs):
        if mask >> bit & 1:
            deg[u] += 1
            deg[v] += 1
    return tuple(sorted(deg))


def _mask_edges(mask: int, pairs) -> tuple:
    return tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1)


@lru_cache(maxsize=None)
def _graph_classes(k: int, connected_only: bool) -> tuple:
    """Canonical edge sets of all k-node graphs up to isomorphism.

    Ordered by (edge count, sorted degree sequence, canonical edge set),
    each compared lexicographically. Canonical form is the minimum edge
    bitmask over all node relabelings, so the order is reproducible from
    first principles.
    """
    if k > 5:
        raise ValueError("enumeration supported up to 5 nodes")
    pairs = _pairs(k)
    pair_pos = {pq: i for i, pq in enumerate(pairs)}
    perms = list(itertools.permutations(range(k)))
    seen = set()
    classes = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        orbit = {_relabel_mask(mask, perm, pairs, pair_pos) for perm in perms}
        seen.update(orbit)
        canon = min(orbit)
        if connected_only and not _is_connected_mask(k, canon, pairs):
            continue
        classes.append(canon)
    classes.sort(key=lambda m: (bin(m).count("1"),
                                _degree_sequence(k, m, pairs),
                                _mask_edges(m, pairs)))
    return tuple((_mask_edges(m, pairs)) for m in classes)


def enumerate_patterns(max_nodes: int, connected: bool = True,
                       name_prefix: str = "atlas") -> PatternFamily:
    """All non-isomorphic simple graphs with 1..max_nodes nodes as patterns."""
    if not 1 <= max_nodes <= 5:
        raise ValueError("pattern enumeration supported for 1..5 nodes")
    family = []
    idx = 0
    for k in range(1, max_nodes + 1):
        for edge_tuple in _graph_classes(k, connected):
            family.append(new_pattern(k, edge_tuple, name=f"{name_prefix}:{idx}"))
            idx += 1
    return family


def atlas_connected(count: int) -> PatternFamily:
    """First `count` connected patterns, ordered by node count then the
    canonical order documented in docs/atlas_patterns.md. The 10 patterns
    with at most 4 nodes come first; indices 10..30 have 5 nodes."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if count > MAX_ATLAS:
        raise ValueError(f"atlas enumeration covers only the first {MAX_ATLAS} "
                         "connected patterns (up to 5 nodes)")
    return enumerate_patterns(5, connected=True)[:count]


# ---------------------------------------------------------------------------
# Edge-list text format: header "n m", then m lines "u v"


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"bad header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}, expected integers") from None
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    edges = np.empty((m, 2), dtype=np.int64)
    for i, ln in enumerate(body):
        tok = ln.split()
        if len(tok) != 2:
            raise FormatError(f"line {i + 2}: bad edge line {ln!r}")
        try:
            edges[i, 0], edges[i, 1] = int(tok[0]), int(tok[1])
        except ValueError:
            raise FormatError(f"line {i + 2}: bad edge line {ln!r}") from None
    try:
        return new_graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Dataset format: one JSON record per line
# fields: id (string), n (int), edges ([[u,v],...]), label, node_attrs (opt)


def parse_dataset(stream: Union[str, IO, Iterable[str]]):
    """Parse newline-delimited graph records into (id, Graph, label) triples."""
    if isinstance(stream, str):
        lines: Iterable[str] = stream.splitlines()
    else:
        lines = stream
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {lineno}: malformed record ({exc.msg})") from None
        if not isinstance(rec, dict) or "id" not in rec:
            raise FormatError(f"line {lineno}: record missing 'id'")
        rid = str(rec["id"])
        try:
            g = new_graph(rec["n"], rec.get("edges", []), rec.get("node_attrs"))
            label = rec["label"]
        except (ValueError, KeyError, TypeError) as exc:
            raise FormatError(f"record {rid!r}: {exc}") from None
        out.append((rid, g, str(label)))
    return out


def dataset_record(rid: str, g: Graph, label) -> str:
    """One dataset line for a graph (the writer half of parse_dataset)."""
    rec = {"id": rid, "n": g.n, "edges": [[int(u), int(v)] for u, v in g.edges],
           "label": label}
    if g.node_attrs is not None:
        rec["node_attrs"] = [float(a) for a in g.node_attrs]
    return json.dumps(rec, separators=(",", ":"))
