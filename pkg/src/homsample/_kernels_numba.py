"""Numba JIT kernels for the hot loops.

Same exported names and bit-identical integer results as
``_kernels_numpy``; these run per-trial loops with true short-circuit
evaluation and release the GIL so chunks can run on worker threads.

All hash arithmetic stays strictly in uint64: numba promotes mixed
uint64/int64 expressions to float64, which would silently corrupt keys.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U64 = np.uint64

_C1 = U64(0x87C37B91114253D5)
_C2 = U64(0x4CF5AD432745937F)
_FM1 = U64(0xFF51AFD7ED558CCD)
_FM2 = U64(0xC4CEB9FE1A85EC53)
_ONE = U64(1)
_ZERO = U64(0)


@njit(cache=True, nogil=True, inline="always")
def _fmix64(x):
    x ^= x >> U64(33)
    x *= _FM1
    x ^= x >> U64(33)
    x *= _FM2
    x ^= x >> U64(33)
    return x


@njit(cache=True, nogil=True, inline="always")
def _murmur128(u, v, seed):
    h1 = seed
    h2 = seed
    k1 = u * _C1
    k1 = ((k1 << U64(31)) | (k1 >> U64(33))) * _C2
    h1 ^= k1
    h1 = (h1 << U64(27)) | (h1 >> U64(37))
    h1 += h2
    h1 = h1 * U64(5) + U64(0x52DCE729)
    k2 = v * _C2
    k2 = ((k2 << U64(33)) | (k2 >> U64(31))) * _C1
    h2 ^= k2
    h2 = (h2 << U64(31)) | (h2 >> U64(33))
    h2 += h1
    h2 = h2 * U64(5) + U64(0x38495AB5)
    h1 ^= U64(16)
    h2 ^= U64(16)
    h1 += h2
    h2 += h1
    h1 = _fmix64(h1)
    h2 = _fmix64(h2)
    h1 += h2
    h2 += h1
    return h1, h2


def murmur128_pairs(us, vs, seed):
    us = np.ascontiguousarray(us, dtype=np.uint64)
    vs = np.ascontiguousarray(vs, dtype=np.uint64)
    return _murmur128_pairs_jit(us, vs, U64(seed))


@njit(cache=True, nogil=True)
def _murmur128_pairs_jit(us, vs, seed):
    n = us.shape[0]
    out1 = np.empty(n, dtype=np.uint64)
    out2 = np.empty(n, dtype=np.uint64)
    for i in range(n):
        h1, h2 = _murmur128(us[i], vs[i], seed)
        out1[i] = h1
        out2[i] = h2
    return out1, out2


# ---------------------------------------------------------------------------
# Bloom filter


@njit(cache=True, nogil=True, inline="always")
def _bloom_contains_one(words, m_bits, num_hashes, seed, u, v):
    h1, h2 = _murmur128(u, v, seed)
    h2 = h2 | _ONE
    for i in range(num_hashes):
        idx = (h1 + U64(i) * h2) % m_bits
        if (words[idx >> U64(6)] >> (idx & U64(63))) & _ONE == _ZERO:
            return False
    return True


@njit(cache=True, nogil=True)
def _bloom_build_jit(words, m_bits, num_hashes, seed, eu, ev):
    for j in range(eu.shape[0]):
        h1, h2 = _murmur128(U64(eu[j]), U64(ev[j]), seed)
        h2 = h2 | _ONE
        for i in range(num_hashes):
            idx = (h1 + U64(i) * h2) % m_bits
            words[idx >> U64(6)] |= _ONE << (idx & U64(63))


def bloom_build(eu, ev, m_bits, num_hashes, seed):
    words = np.zeros((int(m_bits) + 63) // 64, dtype=np.uint64)
    _bloom_build_jit(words, U64(m_bits), np.int64(num_hashes), U64(seed),
                     np.ascontiguousarray(eu, dtype=np.int64),
                     np.ascontiguousarray(ev, dtype=np.int64))
    return words


@njit(cache=True, nogil=True)
def _bloom_query_jit(us, vs, words, m_bits, num_hashes, seed):
    out = np.empty(us.shape[0], dtype=np.uint8)
    for j in range(us.shape[0]):
        a = us[j]
        b = vs[j]
        if a > b:
            a, b = b, a
        out[j] = 1 if _bloom_contains_one(words, m_bits, num_hashes, seed,
                                          U64(a), U64(b)) else 0
    return out


def bloom_query_pairs(us, vs, words, m_bits, num_hashes, seed):
    return _bloom_query_jit(np.ascontiguousarray(us, dtype=np.int64),
                            np.ascontiguousarray(vs, dtype=np.int64),
                            words, U64(m_bits), np.int64(num_hashes), U64(seed))


# ---------------------------------------------------------------------------
# Exact adjacency (CSR rows of sorted neighbors, binary search per query)


@njit(cache=True, nogil=True, inline="always")
def _adj_contains_one(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        x = indices[mid]
        if x == v:
            return True
        if x < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True, nogil=True)
def _exact_query_jit(us, vs, indptr, indices):
    out = np.empty(us.shape[0], dtype=np.uint8)
    for j in range(us.shape[0]):
        out[j] = 1 if _adj_contains_one(indptr, indices, us[j], vs[j]) else 0
    return out


def exact_query_pairs(us, vs, indptr, indices):
    return _exact_query_jit(np.ascontiguousarray(us, dtype=np.int64),
                            np.ascontiguousarray(vs, dtype=np.int64),
                            indptr, indices)


# ---------------------------------------------------------------------------
# Morphism testing


@njit(cache=True, nogil=True)
def _hom_indicator_bloom_jit(morphs, pu, pv, words, m_bits, num_hashes, seed):
    n_trials = morphs.shape[0]
    n_edges = pu.shape[0]
    out = np.empty(n_trials, dtype=np.uint8)
    for t in range(n_trials):
        ok = True
        for e in range(n_edges):
            fu = morphs[t, pu[e]]
            fv = morphs[t, pv[e]]
            if fu == fv:  # self-pair can never be an edge
                ok = False
                break
            if fu > fv:
                fu, fv = fv, fu
            if not _bloom_contains_one(words, m_bits, num_hashes, seed,
                                       U64(fu), U64(fv)):
                ok = False
                break
        out[t] = 1 if ok else 0
    return out


def hom_indicator_bloom(morphs, pu, pv, words, m_bits, num_hashes, seed):
    return _hom_indicator_bloom_jit(morphs, pu, pv, words, U64(m_bits),
                                    np.int64(num_hashes), U64(seed))


@njit(cache=True, nogil=True)
def _hom_indicator_exact_jit(morphs, pu, pv, indptr, indices):
    n_trials = morphs.shape[0]
    n_edges = pu.shape[0]
    out = np.empty(n_trials, dtype=np.uint8)
    for t in range(n_trials):
        ok = True
        for e in range(n_edges):
            fu = morphs[t, pu[e]]
            fv = morphs[t, pv[e]]
            if fu == fv:
                ok = False
                break
            if not _adj_contains_one(indptr, indices, fu, fv):
                ok = False
                break
        out[t] = 1 if ok else 0
    return out


def hom_indicator_exact(morphs, pu, pv, indptr, indices):
    return _hom_indicator_exact_jit(morphs, pu, pv, indptr, indices)


# ---------------------------------------------------------------------------
# Brute-force counting


@njit(cache=True, nogil=True)
def _count_homs_jit(n, k, adj_words, pu, pv, total):
    digits = np.zeros(k, dtype=np.int64)
    n_edges = pu.shape[0]
    count = 0
    for _ in range(total):
        ok = True
        for e in range(n_edges):
            fu = digits[pu[e]]
            fv = digits[pv[e]]
            if fu == fv:
                ok = False
                break
            if (adj_words[fu, fv >> 6] >> U64(fv & 63)) & _ONE == _ZERO:
                ok = False
                break
        if ok:
            count += 1
        j = k - 1  # advance the big-endian odometer
        while j >= 0:
            digits[j] += 1
            if digits[j] == n:
                digits[j] = 0
                j -= 1
            else:
                break
    return count


def count_homs(n, k, adj_words, pu, pv):
    total = int(n) ** int(k)
    return int(_count_homs_jit(np.int64(n), np.int64(k), adj_words,
                               np.ascontiguousarray(pu, dtype=np.int64),
                               np.ascontiguousarray(pv, dtype=np.int64),
                               np.int64(total)))
