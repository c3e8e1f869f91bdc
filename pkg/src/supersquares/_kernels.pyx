# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same interface as ``_kernels_py``.

Masks are limited to 64 bits (enough for the 63 nonzero points of GF(8)^2);
wider inputs raise OverflowError so the caller can fall back.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef struct CoverCtx:
    uint64_t *masks
    uint64_t full
    int *offsets
    int *cands
    int *chosen


cdef uint64_t _to_u64(object x) except? 0:
    if x < 0 or x.bit_length() > 64:
        raise OverflowError("mask does not fit in 64 bits")
    return <uint64_t>x


cdef int _cover(CoverCtx *c, uint64_t covered, int depth, list out) except -1:
    cdef uint64_t free_bits = c.full & ~covered
    cdef int bit, k, i
    if free_bits == 0:
        out.append(tuple([c.chosen[k] for k in range(depth)]))
        return 0
    bit = __builtin_ctzll(free_bits)
    for k in range(c.offsets[bit], c.offsets[bit + 1]):
        i = c.cands[k]
        if (covered & c.masks[i]) == 0:
            c.chosen[depth] = i
            _cover(c, covered | c.masks[i], depth + 1, out)
    return 0


def exact_cover(masks, full, start=()):
    """All sets of candidate indices whose masks partition ``full``."""
    cdef int n = len(masks)
    cdef uint64_t ufull = _to_u64(full)
    cdef int nbits = 64 if ufull >> 63 else (<object>full).bit_length()
    cdef CoverCtx c
    cdef int i, b, total = 0, depth = 0
    cdef uint64_t m, covered = 0
    cdef list out = []

    c.full = ufull
    c.masks = <uint64_t *>malloc(max(n, 1) * sizeof(uint64_t))
    c.offsets = <int *>malloc((nbits + 1) * sizeof(int))
    c.chosen = <int *>malloc((nbits + len(start) + 1) * sizeof(int))
    c.cands = NULL
    try:
        for b in range(nbits + 1):
            c.offsets[b] = 0
        for i in range(n):
            c.masks[i] = _to_u64(masks[i])
            m = c.masks[i]
            total += __builtin_popcountll(m)
            while m:
                b = __builtin_ctzll(m)
                if b < nbits:
                    c.offsets[b + 1] += 1
                m &= m - 1
        for b in range(nbits):
            c.offsets[b + 1] += c.offsets[b]
        c.cands = <int *>malloc(max(total, 1) * sizeof(int))
        fill = [c.offsets[b] for b in range(nbits)]
        for i in range(n):
            m = c.masks[i]
            while m:
                b = __builtin_ctzll(m)
                if b < nbits:
                    c.cands[fill[b]] = i
                    fill[b] += 1
                m &= m - 1

        for i in start:
            if covered & c.masks[i]:
                return []
            covered |= c.masks[i]
            c.chosen[depth] = i
            depth += 1
        _cover(&c, covered, depth, out)
    finally:
        free(c.masks)
        free(c.offsets)
        free(c.chosen)
        free(c.cands)
    return out


cdef struct FamilyCtx:
    uint64_t *masks
    uint64_t *reach
    int n
    int block
    int *chosen
    int *best
    int best_len


cdef void _family(FamilyCtx *c, int start, uint64_t covered, int depth) nogil:
    cdef int i, k
    if depth > c.best_len:
        c.best_len = depth
        for k in range(depth):
            c.best[k] = c.chosen[k]
    for i in range(start, c.n):
        if depth + __builtin_popcountll(c.reach[i] & ~covered) // c.block <= c.best_len:
            return
        if (covered & c.masks[i]) == 0:
            c.chosen[depth] = i
            _family(c, i + 1, covered | c.masks[i], depth + 1)


def max_disjoint_family(masks, int block_size):
    """A largest set of pairwise disjoint masks (each of ``block_size`` bits)."""
    cdef FamilyCtx c
    cdef int i
    c.n = len(masks)
    c.block = block_size
    c.best_len = 0
    c.masks = <uint64_t *>malloc((c.n + 1) * sizeof(uint64_t))
    c.reach = <uint64_t *>malloc((c.n + 1) * sizeof(uint64_t))
    c.chosen = <int *>malloc((c.n + 1) * sizeof(int))
    c.best = <int *>malloc((c.n + 1) * sizeof(int))
    try:
        for i in range(c.n):
            c.masks[i] = _to_u64(masks[i])
        c.reach[c.n] = 0
        for i in range(c.n - 1, -1, -1):
            c.reach[i] = c.reach[i + 1] | c.masks[i]
        with nogil:
            _family(&c, 0, 0, 0)
        return tuple([c.best[i] for i in range(c.best_len)])
    finally:
        free(c.masks)
        free(c.reach)
        free(c.chosen)
        free(c.best)
