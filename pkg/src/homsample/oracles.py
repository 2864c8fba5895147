"""Edge-membership oracles over a graph's edge set.

Two kinds, both write-once and then immutable:

* ``ExactEdgeSet``: CSR adjacency with sorted neighbor rows, membership
  by binary search within a row; ground truth.
* ``BloomEdgeFilter``: classic Bloom filter sized from a target false
  positive rate; never answers false on a real edge.

Edge keying is fixed and published so filters are reproducible: the
canonical pair (min, max) is encoded as two little-endian 64-bit words
and hashed with MurmurHash3 x64-128 under ``BLOOM_HASH_SEED``; probe i
uses double hashing ``(h1 + i * h2) mod m_bits`` with ``h2`` forced odd
so probes cannot cycle degenerately when ``m_bits`` is even.
"""

from __future__ import annotations

import math
import struct

import numpy as np

from . import backend
from .graphs import Graph

# Published hash seed ("HOMS"); changing it changes every filter bit.
BLOOM_HASH_SEED = 0x484F4D53

# Tiny graphs still get a usable bit array.
MIN_BLOOM_BITS = 64

_HEADER = struct.Struct("<4sHQIQdQ")
_MAGIC = b"HSBF"
_VERSION = 1

_MAX_NODE = 1 << 32


class ExactEdgeSet:
    """Ground-truth membership backed by a CSR adjacency."""

    kind = "exact"

    __slots__ = ("n", "item_count", "indptr", "indices")

    def __init__(self, n: int, item_count: int, indptr: np.ndarray,
                 indices: np.ndarray):
        self.n = n
        self.item_count = item_count
        self.indptr = indptr
        self.indices = indices
        indptr.setflags(write=False)
        indices.setflags(write=False)

    def contains(self, u: int, v: int) -> bool:
        assert 0 <= u < self.n and 0 <= v < self.n
        if u == v:
            return False
        kern = backend.kernels()
        res = kern.exact_query_pairs(np.array([u], dtype=np.int64),
                                     np.array([v], dtype=np.int64),
                                     self.indptr, self.indices)
        return bool(res[0])


class BloomEdgeFilter:
    """Approximate membership with no false negatives."""

    kind = "bloom"

    __slots__ = ("m_bits", "num_hashes", "target_fpr", "item_count",
                 "hash_seed", "words")

    def __init__(self, m_bits, num_hashes, target_fpr, item_count, hash_seed,
                 words: np.ndarray):
        self.m_bits = int(m_bits)
        self.num_hashes = int(num_hashes)
        self.target_fpr = float(target_fpr)
        self.item_count = int(item_count)
        self.hash_seed = int(hash_seed)
        self.words = words
        words.setflags(write=False)

    def contains(self, u: int, v: int) -> bool:
        if u == v:
            return False
        kern = backend.kernels()
        res = kern.bloom_query_pairs(np.array([u], dtype=np.int64),
                                     np.array([v], dtype=np.int64),
                                     self.words, self.m_bits, self.num_hashes,
                                     self.hash_seed)
        return bool(res[0])

    def to_bytes(self) -> bytes:
        header = _HEADER.pack(_MAGIC, _VERSION, self.m_bits, self.num_hashes,
                              self.item_count, self.target_fpr, self.hash_seed)
        return header + self.words.astype("<u8").tobytes()

    @classmethod
    def from_bytes(cls, blob: bytes) -> "BloomEdgeFilter":
        if len(blob) < _HEADER.size:
            raise ValueError("truncated filter blob")
        magic, version, m_bits, h, items, fpr, seed = _HEADER.unpack_from(blob)
        if magic != _MAGIC:
            raise ValueError("bad filter magic")
        if version != _VERSION:
            raise ValueError(f"unsupported filter version {version}")
        words = np.frombuffer(blob, dtype="<u8", offset=_HEADER.size).astype(np.uint64)
        if words.shape[0] != (m_bits + 63) // 64:
            raise ValueError("filter bit array length mismatch")
        return cls(m_bits, h, fpr, items, seed, words)


EdgeOracle = ExactEdgeSet | BloomEdgeFilter


def bloom_parameters(item_count: int, fpr: float) -> tuple[int, int]:
    """Optimal (m_bits, num_hashes) for the target false positive rate."""
    m_bits = math.ceil(-item_count * math.log(fpr) / (math.log(2) ** 2))
    m_bits = max(m_bits, MIN_BLOOM_BITS)
    num_hashes = max(1, round((m_bits / item_count) * math.log(2)))
    return m_bits, num_hashes


def build_exact(g: Graph) -> ExactEdgeSet:
    if g.n >= _MAX_NODE:
        raise ValueError("node ids must fit in 32 bits")
    rows = np.concatenate((g.edges[:, 0], g.edges[:, 1]))
    cols = np.concatenate((g.edges[:, 1], g.edges[:, 0]))
    order = np.lexsort((cols, rows))
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    if rows.size:
        np.cumsum(np.bincount(rows, minlength=g.n), out=indptr[1:])
    indices = np.ascontiguousarray(cols[order])
    return ExactEdgeSet(g.n, g.m, indptr, indices)


def build_bloom(g: Graph, fpr: float = 0.01) -> BloomEdgeFilter:
    if not 0.0 < fpr < 1.0:
        raise ValueError("false positive rate must lie strictly in (0, 1)")
    if g.m == 0:
        raise ValueError("cannot build a Bloom filter for an edgeless graph; "
                         "use the exact oracle")
    if g.n >= _MAX_NODE:
        raise ValueError("node ids must fit in 32 bits")
    m_bits, num_hashes = bloom_parameters(g.m, fpr)
    words = backend.kernels().bloom_build(g.edges[:, 0], g.edges[:, 1],
                                          m_bits, num_hashes, BLOOM_HASH_SEED)
    return BloomEdgeFilter(m_bits, num_hashes, fpr, g.m, BLOOM_HASH_SEED, words)


def build_oracle(g: Graph, kind: str, fpr: float = 0.01) -> EdgeOracle:
    """Build by name; "auto" prefers exact below 10**4 nodes, Bloom above.

    Edgeless graphs always get the exact oracle (a filter needs items).
    """
    if kind == "auto":
        kind = "exact" if (g.n < 10_000 or g.m == 0) else "bloom"
    if kind == "exact":
        return build_exact(g)
    if kind == "bloom":
        return build_bloom(g, fpr)
    raise ValueError(f"unknown oracle kind {kind!r}")
