"""Pure numpy kernels; the reference semantics for the numba twins.

All hashing is integer math on uint64 arrays (wrapping mod 2**64), so
results are bit-identical to the numba backend. Short-circuiting of
failed morphisms is realized by shrinking an alive mask per pattern
edge instead of per-trial early exit.
"""

from __future__ import annotations

import numpy as np

U64 = np.uint64

_C1 = U64(0x87C37B91114253D5)
_C2 = U64(0x4CF5AD432745937F)
_FM1 = U64(0xFF51AFD7ED558CCD)
_FM2 = U64(0xC4CEB9FE1A85EC53)


def _rotl(x, r):
    r = U64(r)
    return (x << r) | (x >> (U64(64) - r))


def _fmix64(x):
    x ^= x >> U64(33)
    x *= _FM1
    x ^= x >> U64(33)
    x *= _FM2
    x ^= x >> U64(33)
    return x


def murmur128_pairs(us, vs, seed):
    """MurmurHash3 x64-128 of the 16-byte key u||v (two LE 64-bit words).

    Returns the two 64-bit output words for each input pair.
    """
    us = np.asarray(us, dtype=np.uint64)
    vs = np.asarray(vs, dtype=np.uint64)
    with np.errstate(over="ignore"):
        h1 = np.full(us.shape, U64(seed), dtype=np.uint64)
        h2 = h1.copy()
        k1 = us * _C1
        k1 = _rotl(k1, 31) * _C2
        h1 ^= k1
        h1 = _rotl(h1, 27) + h2
        h1 = h1 * U64(5) + U64(0x52DCE729)
        k2 = vs * _C2
        k2 = _rotl(k2, 33) * _C1
        h2 ^= k2
        h2 = _rotl(h2, 31) + h1
        h2 = h2 * U64(5) + U64(0x38495AB5)
        h1 ^= U64(16)
        h2 ^= U64(16)
        h1 = h1 + h2
        h2 = h2 + h1
        h1 = _fmix64(h1)
        h2 = _fmix64(h2)
        h1 = h1 + h2
        h2 = h2 + h1
    return h1, h2


# ---------------------------------------------------------------------------
# Bloom filter


def bloom_build(eu, ev, m_bits, num_hashes, seed):
    words = np.zeros((int(m_bits) + 63) // 64, dtype=np.uint64)
    _bloom_set(words, U64(m_bits), int(num_hashes), seed,
               eu.astype(np.uint64), ev.astype(np.uint64))
    return words


def _bloom_set(words, m_bits, num_hashes, seed, us, vs):
    h1, h2 = murmur128_pairs(us, vs, seed)
    h2 = h2 | U64(1)
    with np.errstate(over="ignore"):
        for i in range(num_hashes):
            idx = (h1 + U64(i) * h2) % m_bits
            np.bitwise_or.at(words, (idx >> U64(6)).astype(np.int64),
                             U64(1) << (idx & U64(63)))


def _bloom_probe(words, m_bits, num_hashes, seed, us, vs):
    """Membership of canonical (u < v) pairs; returns a bool array."""
    h1, h2 = murmur128_pairs(us, vs, seed)
    h2 = h2 | U64(1)
    ok = np.ones(us.shape, dtype=bool)
    with np.errstate(over="ignore"):
        for i in range(num_hashes):
            if not ok.any():
                break
            idx = (h1[ok] + U64(i) * h2[ok]) % m_bits
            bit = (words[(idx >> U64(6)).astype(np.int64)] >> (idx & U64(63))) & U64(1)
            ok[np.nonzero(ok)[0][bit == U64(0)]] = False
    return ok


def bloom_query_pairs(us, vs, words, m_bits, num_hashes, seed):
    """Filter membership for arbitrary pairs (canonicalized internally)."""
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    lo = np.minimum(us, vs).astype(np.uint64)
    hi = np.maximum(us, vs).astype(np.uint64)
    return _bloom_probe(words, U64(m_bits), int(num_hashes), seed, lo, hi).astype(np.uint8)


# ---------------------------------------------------------------------------
# Exact adjacency: CSR rows of sorted neighbors, binary search per query.


def _adjacency_probe(indptr, indices, us, vs):
    """Vectorized per-row binary search; returns a bool array."""
    found = np.zeros(us.shape[0], dtype=bool)
    lo = indptr[us].astype(np.int64)
    hi = indptr[us + 1].astype(np.int64)
    pending = np.nonzero(lo < hi)[0]
    while pending.size:
        mid = (lo[pending] + hi[pending]) >> 1
        val = indices[mid]
        target = vs[pending]
        eq = val == target
        found[pending[eq]] = True
        less = val < target
        lo[pending[less]] = mid[less] + 1
        greater = ~(eq | less)
        hi[pending[greater]] = mid[greater]
        pending = pending[~eq]
        pending = pending[lo[pending] < hi[pending]]
    return found


def exact_query_pairs(us, vs, indptr, indices):
    us = np.asarray(us, dtype=np.int64)
    vs = np.asarray(vs, dtype=np.int64)
    return _adjacency_probe(indptr, indices, us, vs).astype(np.uint8)


# ---------------------------------------------------------------------------
# Morphism testing: one indicator per sampled morphism


def hom_indicator_bloom(morphs, pu, pv, words, m_bits, num_hashes, seed):
    n_trials = morphs.shape[0]
    alive = np.ones(n_trials, dtype=bool)
    for e in range(pu.shape[0]):
        idx = np.nonzero(alive)[0]
        if idx.size == 0:
            break
        fu = morphs[idx, pu[e]]
        fv = morphs[idx, pv[e]]
        neq = fu != fv
        ok = np.zeros(idx.size, dtype=bool)
        if neq.any():
            lo = np.minimum(fu[neq], fv[neq]).astype(np.uint64)
            hi = np.maximum(fu[neq], fv[neq]).astype(np.uint64)
            ok[neq] = _bloom_probe(words, U64(m_bits), int(num_hashes), seed, lo, hi)
        alive[idx] = ok
    return alive.astype(np.uint8)


def hom_indicator_exact(morphs, pu, pv, indptr, indices):
    n_trials = morphs.shape[0]
    alive = np.ones(n_trials, dtype=bool)
    for e in range(pu.shape[0]):
        idx = np.nonzero(alive)[0]
        if idx.size == 0:
            break
        fu = morphs[idx, pu[e]]
        fv = morphs[idx, pv[e]]
        neq = fu != fv
        ok = np.zeros(idx.size, dtype=bool)
        if neq.any():
            ok[neq] = _adjacency_probe(indptr, indices, fu[neq], fv[neq])
        alive[idx] = ok
    return alive.astype(np.uint8)


# ---------------------------------------------------------------------------
# Brute-force homomorphism counting over all n**k maps


def count_homs(n, k, adj_words, pu, pv):
    """Count maps [k] -> [n] preserving every pattern edge.

    Enumerates assignment indices in big-endian mixed-radix order,
    in blocks to bound memory.
    """
    total = int(n) ** int(k)
    block = 1 << 20
    powers = np.array([int(n) ** (k - 1 - j) for j in range(k)], dtype=np.int64)
    count = 0
    for start in range(0, total, block):
        idx = np.arange(start, min(total, start + block), dtype=np.int64)
        ok = np.ones(idx.shape, dtype=bool)
        for e in range(pu.shape[0]):
            fu = (idx // powers[pu[e]]) % n
            fv = (idx // powers[pv[e]]) % n
            good = fu != fv
            if good.any():
                bit = (adj_words[fu[good], fv[good] >> 6]
                       >> (fv[good] & 63).astype(np.uint64)) & U64(1)
                good[np.nonzero(good)[0]] = bit == U64(1)
            ok &= good
            if not ok.any():
                break
        count += int(ok.sum())
    return count
